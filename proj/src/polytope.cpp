#include "hirsch/polytope.hpp"

#include <algorithm>

#include "hirsch/linalg.hpp"

namespace hirsch {

std::vector<std::size_t> indices_of(const Bitset& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

// -------------------------------------------------------------- VPolytope

VPolytope::VPolytope(std::vector<Point> pts, std::vector<std::string> lbls)
    : vertices(std::move(pts)), labels(std::move(lbls)) {
  if (!labels.empty() && labels.size() != vertices.size()) {
    throw GeometryError("VPolytope: label count does not match vertex count");
  }
  if (!vertices.empty()) common_dim(vertices);
}

std::string VPolytope::label(std::size_t i) const { return labels.empty() ? std::to_string(i) : labels[i]; }

std::optional<std::size_t> VPolytope::find(const std::string& l) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (label(i) == l) return i;
  }
  return std::nullopt;
}

std::size_t VPolytope::index_of(const std::string& l) const {
  const auto i = find(l);
  if (!i) throw GeometryError("no vertex labeled '" + l + "'");
  return *i;
}

VPolytope VPolytope::subset(const std::vector<std::size_t>& idx) const {
  VPolytope out;
  for (auto i : idx) {
    out.vertices.push_back(vertices.at(i));
    if (!labels.empty()) out.labels.push_back(labels[i]);
  }
  return out;
}

// --------------------------------------------------------- FacetIncidence

FacetIncidence::FacetIncidence(std::vector<Bitset> rows, std::size_t n_vertices)
    : rows_(std::move(rows)), cols_(n_vertices, Bitset(0)), n_vertices_(n_vertices) {
  for (auto& c : cols_) c.resize(rows_.size());
  for (std::size_t f = 0; f < rows_.size(); ++f) {
    for (auto v = rows_[f].find_first(); v != Bitset::npos; v = rows_[f].find_next(v)) cols_[v].set(f);
  }
}

FacetIncidence FacetIncidence::transpose() const { return FacetIncidence(cols_, rows_.size()); }

std::optional<std::size_t> HullResult::find_facet(const Inequality& canonical) const {
  const auto& ineqs = hpoly.inequalities;
  const auto it = std::lower_bound(ineqs.begin(), ineqs.end(), canonical);
  if (it != ineqs.end() && *it == canonical) return static_cast<std::size_t>(it - ineqs.begin());
  return std::nullopt;
}

// ------------------------------------------------------------ vertices

namespace {

/// Rank of the facet normals tight at vertex v.
std::size_t normal_rank(const HullResult& hull, std::size_t v) {
  linalg::Matrix normals;
  for (auto f : hull.incidence.facets_of(v)) normals.push_back(hull.facet(f).coeffs());
  return linalg::rank(normals);
}

}  // namespace

std::vector<std::size_t> extreme_point_indices(const VPolytope& p, const HullResult& hull) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (hull.incidence.column(v).count() >= static_cast<std::size_t>(hull.dim) &&
        normal_rank(hull, v) == static_cast<std::size_t>(hull.dim)) {
      out.push_back(v);
    }
  }
  return out;
}

VPolytope extreme_points(const VPolytope& p) {
  const HullResult hull = facet_enumeration(p);
  return p.subset(extreme_point_indices(p, hull));
}

VPolytope certify_vertices(const VPolytope& p, const HullResult& hull) {
  const auto ext = extreme_point_indices(p, hull);
  std::size_t expected = 0;
  for (auto v : ext) {
    if (v != expected) break;
    ++expected;
  }
  if (expected < p.size()) {
    const std::size_t bad = expected;
    const auto tight = hull.incidence.column(bad).count();
    throw NotAVertexError(bad, "point " + p.label(bad) + " " + p.vertices[bad].to_string() +
                                   " is not a vertex (tight on " + std::to_string(tight) +
                                   " facets, normal rank below " + std::to_string(hull.dim) + ")");
  }
  return p;
}

VPolytope certify_vertices(const VPolytope& p) { return certify_vertices(p, facet_enumeration(p)); }

bool is_simple(const HullResult& hull) {
  for (std::size_t v = 0; v < hull.incidence.vertices(); ++v) {
    if (hull.incidence.column(v).count() != static_cast<std::size_t>(hull.dim)) return false;
  }
  return true;
}

bool is_simplicial(const HullResult& hull) {
  for (std::size_t f = 0; f < hull.incidence.facets(); ++f) {
    if (hull.incidence.row(f).count() != static_cast<std::size_t>(hull.dim)) return false;
  }
  return true;
}

Face face_maximizing(const VPolytope& p, const Point& c) {
  if (std::all_of(c.coords().begin(), c.coords().end(), [](const Scalar& x) { return sgn(x) == 0; })) {
    throw GeometryError("face_maximizing: zero functional");
  }
  Face f;
  Scalar best;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Scalar val = dot(c, p.vertices[i]);
    if (f.vertices.empty() || val > best) {
      best = val;
      f.vertices.assign(1, i);
    } else if (val == best) {
      f.vertices.push_back(i);
    }
  }
  std::vector<Point> pts;
  for (auto i : f.vertices) pts.push_back(p.vertices[i]);
  f.dim = affine_rank(pts);
  return f;
}

// ---------------------------------------------------------------- polar

VPolytope translated(const VPolytope& p, const Point& shift) {
  VPolytope out = p;
  for (auto& v : out.vertices) v += shift;
  return out;
}

VPolytope polar_about_origin(const VPolytope& p, const HullResult& hull) {
  if (hull.dim != static_cast<int>(p.ambient_dim())) {
    throw GeometryError("polar: polytope is not full-dimensional");
  }
  VPolytope out;
  for (std::size_t f = 0; f < hull.facet_count(); ++f) {
    const Inequality& ineq = hull.facet(f);
    if (sgn(ineq.offset()) <= 0) throw GeometryError("polar: origin is not strictly interior");
    Point v = ineq.normal();
    v *= 1 / ineq.offset();
    out.vertices.push_back(std::move(v));
    out.labels.push_back("F" + std::to_string(f));
  }
  return out;
}

VPolytope polar_about_origin(const VPolytope& p) { return polar_about_origin(p, facet_enumeration(p)); }

VPolytope polar(const VPolytope& p) {
  const Point c = centroid(p.vertices);
  return polar_about_origin(translated(p, -c));
}

}  // namespace hirsch
