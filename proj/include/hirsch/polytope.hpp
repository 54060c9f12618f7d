#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hirsch/geometry.hpp"

namespace hirsch {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

std::vector<std::size_t> indices_of(const Bitset& b);

/// Vertex-list representation. Labels are optional; when present there is
/// exactly one per vertex.
struct VPolytope {
  std::vector<Point> vertices;
  std::vector<std::string> labels;

  VPolytope() = default;
  explicit VPolytope(std::vector<Point> pts, std::vector<std::string> lbls = {});

  std::size_t size() const { return vertices.size(); }
  std::size_t ambient_dim() const { return vertices.empty() ? 0 : vertices.front().dim(); }
  /// The label of vertex i, or its index when unlabeled.
  std::string label(std::size_t i) const;
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  ///< throws if absent
  VPolytope subset(const std::vector<std::size_t>& idx) const;
};

struct HPolytope {
  std::size_t ambient_dim = 0;
  std::vector<Inequality> inequalities;  ///< canonical, facet-defining
  std::vector<Inequality> equalities;    ///< affine hull, when not full-dimensional
};

/// Boolean facet x vertex matrix; true means the vertex is tight.
class FacetIncidence {
 public:
  FacetIncidence() = default;
  FacetIncidence(std::vector<Bitset> rows, std::size_t n_vertices);

  std::size_t facets() const { return rows_.size(); }
  std::size_t vertices() const { return n_vertices_; }
  bool contains(std::size_t facet, std::size_t vertex) const { return rows_[facet][vertex]; }
  const Bitset& row(std::size_t facet) const { return rows_[facet]; }
  const Bitset& column(std::size_t vertex) const { return cols_[vertex]; }
  std::vector<std::size_t> vertices_of(std::size_t facet) const { return indices_of(rows_[facet]); }
  std::vector<std::size_t> facets_of(std::size_t vertex) const { return indices_of(cols_[vertex]); }
  FacetIncidence transpose() const;

  friend bool operator==(const FacetIncidence& a, const FacetIncidence& b) {
    return a.n_vertices_ == b.n_vertices_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<Bitset> rows_;
  std::vector<Bitset> cols_;
  std::size_t n_vertices_ = 0;
};

/// Facets of conv(points) together with exact incidences.
struct HullResult {
  HPolytope hpoly;
  FacetIncidence incidence;
  int dim = 0;  ///< affine dimension of the hull

  std::size_t facet_count() const { return hpoly.inequalities.size(); }
  const Inequality& facet(std::size_t i) const { return hpoly.inequalities[i]; }
  /// Index of a facet with this canonical inequality, if any.
  std::optional<std::size_t> find_facet(const Inequality& canonical) const;
};

class NotAVertexError : public GeometryError {
 public:
  NotAVertexError(std::size_t index, const std::string& what) : GeometryError(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Double-description facet enumeration on the homogenized point set.
/// Facets are sorted lexicographically by canonical coefficients. Input
/// that is not full-dimensional is handled inside its affine hull: the
/// hull's equations are reported in `hpoly.equalities` and facets are
/// written in the coordinates that parametrize the hull.
HullResult facet_enumeration(const VPolytope& p);

/// Throws NotAVertexError naming the first input point that is not a vertex.
VPolytope certify_vertices(const VPolytope& p);
VPolytope certify_vertices(const VPolytope& p, const HullResult& hull);

/// Indices of the points of `p` that are vertices of conv(p).
std::vector<std::size_t> extreme_point_indices(const VPolytope& p, const HullResult& hull);
VPolytope extreme_points(const VPolytope& p);

bool is_simple(const HullResult& hull);
bool is_simplicial(const HullResult& hull);

struct Face {
  std::vector<std::size_t> vertices;
  int dim = -1;
};

/// The face of P on which the linear functional c attains its maximum.
Face face_maximizing(const VPolytope& p, const Point& c);

/// Polar with respect to the origin, which must be strictly interior.
/// Vertex i of the result is facet i of p scaled so that a.x = 1 on it;
/// the result carries labels "F<i>".
VPolytope polar_about_origin(const VPolytope& p, const HullResult& hull);
VPolytope polar_about_origin(const VPolytope& p);

/// Translates p by minus its vertex centroid, then takes the polar.
VPolytope polar(const VPolytope& p);

VPolytope translated(const VPolytope& p, const Point& shift);

}  // namespace hirsch
