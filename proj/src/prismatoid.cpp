#include "hirsch/prismatoid.hpp"

#include <algorithm>

namespace hirsch {

namespace {

bool opposite(const Inequality& a, const Inequality& b) {
  // Canonical forms are primitive, so antiparallel normals are exact negatives.
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.coeffs()[i] != -b.coeffs()[i]) return false;
  }
  return true;
}

bool first_nonzero_positive(const Inequality& ineq) {
  for (const auto& c : ineq.coeffs()) {
    if (sgn(c) != 0) return sgn(c) > 0;
  }
  return false;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> find_prismatoid_bases(const HullResult& hull) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& inc = hull.incidence;
  for (std::size_t f = 0; f < hull.facet_count(); ++f) {
    if (!first_nonzero_positive(hull.facet(f))) continue;
    for (std::size_t g = 0; g < hull.facet_count(); ++g) {
      if (!opposite(hull.facet(f), hull.facet(g))) continue;
      if ((inc.row(f) | inc.row(g)).all()) out.emplace_back(f, g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Prismatoid make_prismatoid(const VPolytope& p, std::size_t base_plus, std::size_t base_minus, HullResult hull) {
  certify_vertices(p, hull);
  if (hull.dim != static_cast<int>(p.ambient_dim())) {
    throw NotAPrismatoidError("prismatoid: polytope is not full-dimensional");
  }
  if (base_plus >= hull.facet_count() || base_minus >= hull.facet_count() || base_plus == base_minus) {
    throw NotAPrismatoidError("prismatoid: invalid base facet indices");
  }
  if (!opposite(hull.facet(base_plus), hull.facet(base_minus))) {
    throw NotAPrismatoidError("prismatoid: base facets are not parallel");
  }
  if (!(hull.incidence.row(base_plus) | hull.incidence.row(base_minus)).all()) {
    throw NotAPrismatoidError("prismatoid: some vertex lies on neither base");
  }
  return Prismatoid{p, std::move(hull), base_plus, base_minus};
}

Prismatoid make_prismatoid(const VPolytope& p, const Inequality& plus, const Inequality& minus) {
  HullResult hull = facet_enumeration(p);
  const auto fp = hull.find_facet(plus.canonical());
  const auto fm = hull.find_facet(minus.canonical());
  if (!fp || !fm) throw NotAPrismatoidError("prismatoid: a base inequality is not a facet");
  return make_prismatoid(p, *fp, *fm, std::move(hull));
}

Prismatoid make_prismatoid(const VPolytope& p) {
  HullResult hull = facet_enumeration(p);
  const auto bases = find_prismatoid_bases(hull);
  if (bases.empty()) throw NotAPrismatoidError("prismatoid: no pair of parallel facets covers all vertices");
  return make_prismatoid(p, bases.front().first, bases.front().second, std::move(hull));
}

int width(const Prismatoid& q, const DualGraph& dual) { return graph_distance(dual, q.base_plus, q.base_minus); }

int width(const Prismatoid& q) { return width(q, dual_graph(q.hull)); }

bool has_dstep_property(const Prismatoid& q) { return width(q) <= q.dim(); }

std::optional<Spindle> is_spindle(const HullResult& hull) {
  const auto& inc = hull.incidence;
  const std::size_t n = inc.vertices();
  std::optional<VertexGraph> graph;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (inc.column(u).intersects(inc.column(v))) continue;
      if (!(inc.column(u) | inc.column(v)).all()) continue;
      if (!graph) graph = vertex_graph(hull);
      return Spindle{u, v, graph_distance(*graph, u, v)};
    }
  }
  return std::nullopt;
}

std::optional<Spindle> is_spindle(const VPolytope& p) { return is_spindle(facet_enumeration(certify_vertices(p))); }

}  // namespace hirsch
