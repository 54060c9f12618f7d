#pragma once

#include <optional>
#include <utility>

#include "hirsch/graph.hpp"
#include "hirsch/polytope.hpp"

namespace hirsch {

/// A polytope with two parallel facets that between them contain every vertex.
struct Prismatoid {
  VPolytope polytope;
  HullResult hull;
  std::size_t base_plus = 0;   ///< facet index into hull
  std::size_t base_minus = 0;

  int dim() const { return hull.dim; }
  std::size_t vertex_count() const { return polytope.size(); }
  std::vector<std::size_t> plus_vertices() const { return hull.incidence.vertices_of(base_plus); }
  std::vector<std::size_t> minus_vertices() const { return hull.incidence.vertices_of(base_minus); }
  /// n - 2d; zero exactly when both bases are simplices.
  long asimpliciality() const { return static_cast<long>(vertex_count()) - 2L * dim(); }
};

class NotAPrismatoidError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// All pairs (plus, minus) of opposite facets covering every vertex. In
/// each pair the plus facet is the one whose normal has a positive first
/// nonzero coordinate.
std::vector<std::pair<std::size_t, std::size_t>> find_prismatoid_bases(const HullResult& hull);

/// Certifies vertices, enumerates facets and checks the given bases.
Prismatoid make_prismatoid(const VPolytope& p, std::size_t base_plus, std::size_t base_minus, HullResult hull);
/// As above, with bases given by their (not necessarily canonical) inequalities.
Prismatoid make_prismatoid(const VPolytope& p, const Inequality& plus, const Inequality& minus);
/// Uses the first pair reported by find_prismatoid_bases.
Prismatoid make_prismatoid(const VPolytope& p);

/// Dual-graph distance between the two bases.
int width(const Prismatoid& q);
int width(const Prismatoid& q, const DualGraph& dual);
/// width <= dim.
bool has_dstep_property(const Prismatoid& q);

struct Spindle {
  std::size_t u = 0;
  std::size_t v = 0;
  int length = 0;
};

/// First vertex pair (in index order) such that every facet contains exactly
/// one of them, with their vertex-graph distance.
std::optional<Spindle> is_spindle(const VPolytope& p);
std::optional<Spindle> is_spindle(const HullResult& hull);

}  // namespace hirsch
