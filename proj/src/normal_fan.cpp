#include "hirsch/normal_fan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <numbers>
#include <set>

#include "hirsch/linalg.hpp"
#include "hirsch/santos.hpp"

namespace hirsch {

namespace {

/// Neighbors of v in the vertex graph, without building the whole graph.
std::vector<std::size_t> vertex_neighbors(const HullResult& hull, std::size_t v) {
  const auto& inc = hull.incidence;
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < inc.vertices(); ++w) {
    if (w == v) continue;
    const Bitset shared = inc.column(v) & inc.column(w);
    if (hull.dim > 1 && shared.count() < static_cast<std::size_t>(hull.dim - 1)) continue;
    Bitset face(inc.vertices());
    face.set();
    for (auto f = shared.find_first(); f != Bitset::npos; f = shared.find_next(f)) face &= inc.row(f);
    if (face.count() == 2) out.push_back(w);
  }
  return out;
}

Point primitive_direction(const std::vector<Scalar>& v) {
  const auto ints = linalg::primitive_integer(v);
  std::vector<Scalar> out(ints.begin(), ints.end());
  return Point(std::move(out));
}

std::vector<Point> points_of(const VPolytope& p, const Bitset& subset) {
  std::vector<Point> out;
  for (auto v = subset.find_first(); v != Bitset::npos; v = subset.find_next(v)) out.push_back(p.vertices[v]);
  return out;
}

int affine_dim(const std::vector<Point>& pts) { return pts.empty() ? -1 : affine_rank(pts); }

/// Vertex indices of p attaining max c.x.
Bitset argmax(const VPolytope& p, const Point& c) {
  Bitset out(p.size());
  for (auto i : face_maximizing(p, c).vertices) out.set(i);
  return out;
}

std::string names(const VPolytope& p, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) {
    out += (first ? "" : ",") + p.label(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

// ----------------------------------------------------------- normal cones

NormalCone normal_cone(const VPolytope& p, const HullResult& hull, std::size_t vertex) {
  if (hull.dim != static_cast<int>(p.ambient_dim())) throw GeometryError("normal_cone: polytope is not full-dimensional");
  NormalCone c;
  c.vertex = vertex;
  for (auto f : hull.incidence.facets_of(vertex)) c.generators.push_back(hull.facet(f).normal());
  std::set<Inequality> ineqs;
  for (auto w : vertex_neighbors(hull, vertex)) {
    ineqs.insert(Inequality((p.vertices[w] - p.vertices[vertex]).coords(), Scalar(0)).canonical());
  }
  c.inequalities.assign(ineqs.begin(), ineqs.end());
  return c;
}

NormalCone normal_cone(const VPolytope& p, std::size_t vertex) { return normal_cone(p, facet_enumeration(p), vertex); }

bool contains_strictly(const NormalCone& c, const Point& dir) {
  return std::all_of(c.inequalities.begin(), c.inequalities.end(),
                     [&](const Inequality& i) { return evaluate(i, dir).sign > 0; });
}

bool contains(const NormalCone& c, const Point& dir) {
  return std::all_of(c.inequalities.begin(), c.inequalities.end(),
                     [&](const Inequality& i) { return evaluate(i, dir).sign >= 0; });
}

std::vector<Point> facet_normals(const HullResult& hull) {
  std::vector<Point> out;
  for (const auto& f : hull.hpoly.inequalities) out.push_back(f.normal());
  return out;
}

std::vector<Point> gplus_vertices() {
  return facet_normals(facet_enumeration(santos::base_polytope(santos::vertices(), true)));
}

std::vector<Point> gminus_vertices() {
  return facet_normals(facet_enumeration(santos::base_polytope(santos::vertices(), false)));
}

Report torus_membership_check() {
  Report r;
  const auto normals = gplus_vertices();
  std::size_t on = 0;
  std::string bad;
  for (const auto& n : normals) {
    const Scalar a = n[0] * n[0] + n[1] * n[1];
    const Scalar b = n[2] * n[2] + n[3] * n[3];
    if (a == 26 && b == 5) {
      ++on;
    } else if (bad.empty()) {
      bad = " first off-torus normal " + n.to_string();
    }
  }
  r.add("gplus-count", normals.size() == 32, std::to_string(normals.size()) + " facet normals");
  r.add("gplus-torus", on == normals.size(),
        std::to_string(on) + "/" + std::to_string(normals.size()) + " satisfy x1^2+x2^2=26, x3^2+x4^2=5" + bad);
  return r;
}

// ---------------------------------------------------------- Minkowski sum

MinkowskiSum minkowski_sum(const VPolytope& plus, const VPolytope& minus) {
  if (plus.ambient_dim() != minus.ambient_dim()) throw GeometryError("minkowski_sum: dimension mismatch");
  std::map<Point, std::pair<std::size_t, std::size_t>> sums;
  for (std::size_t i = 0; i < plus.size(); ++i) {
    for (std::size_t j = 0; j < minus.size(); ++j) sums.emplace(plus.vertices[i] + minus.vertices[j], std::pair{i, j});
  }
  VPolytope all;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto& [pt, ij] : sums) {
    all.vertices.push_back(pt);
    pairs.push_back(ij);
  }
  const HullResult first = facet_enumeration(all);
  const auto keep = extreme_point_indices(all, first);

  MinkowskiSum m;
  m.sum = all.subset(keep);
  for (auto k : keep) {
    m.summands.push_back(pairs[k]);
    m.sum.labels.push_back(plus.label(pairs[k].first) + "&" + minus.label(pairs[k].second));
  }
  m.hull = facet_enumeration(m.sum);
  for (std::size_t f = 0; f < m.hull.facet_count(); ++f) {
    const Point n = m.hull.facet(f).normal();
    m.facets.push_back({face_maximizing(plus, n), face_maximizing(minus, n)});
  }
  return m;
}

bool decomposition_is_exact(const MinkowskiSum& m, const VPolytope& plus, const VPolytope& minus) {
  for (std::size_t f = 0; f < m.hull.facet_count(); ++f) {
    std::set<Point> sums;
    for (auto i : m.facets[f].plus.vertices) {
      for (auto j : m.facets[f].minus.vertices) sums.insert(plus.vertices[i] + minus.vertices[j]);
    }
    for (const auto& s : sums) {
      if (evaluate(m.hull.facet(f), s).sign != 0) return false;
    }
    for (auto v : m.hull.incidence.vertices_of(f)) {
      if (!sums.count(m.sum.vertices[v])) return false;
    }
  }
  return true;
}

ProjectedBases projected_bases(const Prismatoid& q) {
  ProjectedBases b;
  const auto& c = q.hull.facet(q.base_plus).coeffs();
  b.dropped = static_cast<std::size_t>(
      std::find_if(c.begin(), c.end(), [](const Scalar& x) { return sgn(x) != 0; }) - c.begin());
  for (auto v : q.plus_vertices()) {
    b.plus.vertices.push_back(q.polytope.vertices[v].without(b.dropped));
    b.plus.labels.push_back(q.polytope.label(v));
    b.plus_index.push_back(v);
  }
  for (auto v : q.minus_vertices()) {
    b.minus.vertices.push_back(q.polytope.vertices[v].without(b.dropped));
    b.minus.labels.push_back(q.polytope.label(v));
    b.minus_index.push_back(v);
  }
  return b;
}

// ----------------------------------------------------------------- slices

VPolytope intermediate_slice(const Prismatoid& q, const Scalar& lambda1) {
  if (sgn(lambda1) <= 0 || lambda1 >= 1) throw GeometryError("intermediate_slice: lambda must lie in (0, 1)");
  const Scalar lambda2 = 1 - lambda1;
  const auto& inc = q.hull.incidence;
  const VertexGraph g = vertex_graph(q.hull);
  std::set<Point> pts;
  for (const auto& [a, b] : g.edges()) {
    const bool a_plus = inc.contains(q.base_plus, a);
    const bool b_plus = inc.contains(q.base_plus, b);
    if (a_plus == b_plus) continue;
    const Point& p = q.polytope.vertices[a_plus ? a : b];
    const Point& m = q.polytope.vertices[a_plus ? b : a];
    pts.insert(lambda1 * p + lambda2 * m);
  }
  return VPolytope(std::vector<Point>(pts.begin(), pts.end()));
}

VPolytope weighted_base_sum(const Prismatoid& q, const Scalar& lambda1) {
  const Scalar lambda2 = 1 - lambda1;
  std::set<Point> pts;
  for (auto a : q.plus_vertices()) {
    for (auto b : q.minus_vertices()) pts.insert(lambda1 * q.polytope.vertices[a] + lambda2 * q.polytope.vertices[b]);
  }
  const VPolytope all(std::vector<Point>(pts.begin(), pts.end()));
  return extreme_points(all);
}

// ------------------------------------------------------------ pair d-step

PairDStep pair_dstep_property(const MinkowskiSum& m, int plus_dim, int minus_dim, int d) {
  std::vector<std::size_t> sources;
  std::vector<bool> target(m.facets.size(), false);
  bool any_target = false;
  for (std::size_t f = 0; f < m.facets.size(); ++f) {
    if (m.facets[f].plus.dim == plus_dim - 1) sources.push_back(f);
    if (m.facets[f].minus.dim == minus_dim - 1) target[f] = any_target = true;
  }
  if (sources.empty() || !any_target) throw GeometryError("pair_dstep_property: no facet of the required bidimension");
  const auto dist = bfs_distances(dual_graph(m.hull), sources);
  int best = -1;
  for (std::size_t f = 0; f < m.facets.size(); ++f) {
    if (target[f] && dist[f] >= 0 && (best < 0 || dist[f] < best)) best = dist[f];
  }
  if (best < 0) throw DisconnectedGraphError("pair_dstep_property: dual graph of the sum is disconnected");
  return PairDStep{best + 1 <= d - 1, best + 1};
}

PairDStep pair_dstep_property(const VPolytope& plus, const VPolytope& minus, int d) {
  const MinkowskiSum m = minkowski_sum(plus, minus);
  return pair_dstep_property(m, affine_rank(plus.vertices), affine_rank(minus.vertices), d);
}

// --------------------------------------------------------- transversality

Report transversality_check(const Prismatoid& q) {
  Report r;
  const auto& inc = q.hull.incidence;
  std::size_t ok = 0, total = 0;
  std::string first_bad;
  for (std::size_t f = 0; f < q.hull.facet_count(); ++f) {
    if (f == q.base_plus || f == q.base_minus) continue;
    ++total;
    const int dp = affine_dim(points_of(q.polytope, inc.row(f) & inc.row(q.base_plus)));
    const int dm = affine_dim(points_of(q.polytope, inc.row(f) & inc.row(q.base_minus)));
    if (dp + dm == q.dim() - 2) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = "; facet " + q.hull.facet(f).to_string() + " has " + std::to_string(dp) + "+" + std::to_string(dm);
    }
  }
  r.add("transversality", ok == total,
        std::to_string(ok) + "/" + std::to_string(total) + " non-base facets with dim(F^Q+) + dim(F^Q-) = " +
            std::to_string(q.dim() - 2) + first_bad);
  return r;
}

Report sum_dual_graph_check(const Prismatoid& q, const MinkowskiSum& m, const ProjectedBases& b) {
  Report r;
  const std::size_t k = b.dropped;
  const auto& c = q.hull.facet(q.base_plus).coeffs();
  std::map<Point, std::size_t> sum_index;
  for (std::size_t j = 0; j < m.hull.facet_count(); ++j) sum_index.emplace(m.hull.facet(j).normal(), j);

  // Restricted to the base hyperplane, a.x becomes sum_{i != k} (a_i - a_k c_i / c_k) x_i + const.
  const std::size_t nq = q.hull.facet_count();
  std::vector<long> image(nq, -1);
  std::vector<bool> hit(m.hull.facet_count(), false);
  bool bijective = nq == m.hull.facet_count() + 2;
  for (std::size_t f = 0; f < nq; ++f) {
    if (f == q.base_plus || f == q.base_minus) continue;
    const auto& a = q.hull.facet(f).coeffs();
    std::vector<Scalar> proj;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != k) proj.push_back(a[i] - a[k] * c[i] / c[k]);
    }
    const auto it = sum_index.find(primitive_direction(proj));
    if (it == sum_index.end() || hit[it->second]) {
      bijective = false;
      continue;
    }
    hit[it->second] = true;
    image[f] = static_cast<long>(it->second);
  }
  r.add("sum-facet-count", nq == m.hull.facet_count() + 2,
        std::to_string(m.hull.facet_count()) + " facets in the sum, " + std::to_string(nq) + " in the prismatoid");
  const DualGraph dq = dual_graph(q.hull);
  const DualGraph dm = dual_graph(m.hull);
  std::size_t matched = 0, edges = 0;
  bool iso = bijective;
  if (bijective) {
    for (const auto& [f, g] : dq.edges()) {
      if (f == q.base_plus || f == q.base_minus || g == q.base_plus || g == q.base_minus) continue;
      ++edges;
      if (dm.has_edge(static_cast<std::size_t>(image[f]), static_cast<std::size_t>(image[g]))) ++matched;
    }
    iso = matched == edges && edges == dm.edge_count();
  }
  r.add("sum-dual-isomorphic", iso,
        bijective ? std::to_string(matched) + "/" + std::to_string(edges) + " ridges matched, sum has " +
                        std::to_string(dm.edge_count())
                  : std::string("facet normals do not match one to one"));
  return r;
}

// ------------------------------------------------------ the two normal maps

Report normal_map_position_check(const VPolytope& q) {
  Report r;
  const VPolytope plus = santos::base_polytope(q, true);
  const VPolytope minus = santos::base_polytope(q, false);
  const HullResult hp = facet_enumeration(plus);
  const HullResult hm = facet_enumeration(minus);

  // Sigma+ orbits of 7+ and 7-, through the induced vertex permutations.
  std::set<std::string> orbit_plus, orbit_minus;
  bool perms_ok = true;
  const auto [sigma, sigma_plus] = santos::symmetry_groups();
  for (const auto& g : sigma_plus.elements) {
    const auto perm = santos::vertex_permutation(g, q);
    if (!perm) {
      perms_ok = false;
      continue;
    }
    if (const auto i = q.find("7+")) orbit_plus.insert(q.label((*perm)[*i]));
    if (const auto i = q.find("7-")) orbit_minus.insert(q.label((*perm)[*i]));
  }
  r.add("normal-maps-orbits", perms_ok && orbit_plus.size() == 4 && orbit_minus.size() == 4,
        "orbit of 7+ has " + std::to_string(orbit_plus.size()) + " vertices, orbit of 7- has " +
            std::to_string(orbit_minus.size()));

  // Part 1 and 2: a direction lies in the interior of cone(a) iff a is the
  // unique maximizer.
  const auto interior_in_orbit = [](const VPolytope& target, const std::vector<Point>& dirs,
                                    const std::set<std::string>& orbit, std::string& bad) {
    std::size_t ok = 0;
    for (const auto& u : dirs) {
      const Face f = face_maximizing(target, u);
      if (f.vertices.size() == 1 && orbit.count(target.label(f.vertices.front()))) {
        ++ok;
      } else if (bad.empty()) {
        bad = "; " + u.to_string() + " is not interior to such a cone";
      }
    }
    return ok;
  };
  const auto np = facet_normals(hp);
  const auto nm = facet_normals(hm);
  std::string bad1, bad2;
  const std::size_t ok1 = interior_in_orbit(plus, nm, orbit_plus, bad1);
  const std::size_t ok2 = interior_in_orbit(minus, np, orbit_minus, bad2);
  r.add("normal-maps-part1", ok1 == nm.size() && !nm.empty(),
        std::to_string(ok1) + "/" + std::to_string(nm.size()) + " vertices of G- interior to a cone of the 7+ orbit" + bad1);
  r.add("normal-maps-part2", ok2 == np.size() && !np.empty(),
        std::to_string(ok2) + "/" + std::to_string(np.size()) + " vertices of G+ interior to a cone of the 7- orbit" + bad2);

  // Part 3: v a vertex of G+ (facet Fv of Q+), C = cone(c) the cell of G-
  // containing v. No vertex u of C may lie in cone(a) for a vertex a of Fv.
  std::size_t ok3 = 0;
  std::string bad3;
  for (std::size_t f = 0; f < hp.facet_count(); ++f) {
    const Point v = hp.facet(f).normal();
    const Face c = face_maximizing(minus, v);
    bool good = c.vertices.size() == 1;
    if (good) {
      const Bitset& fv = hp.incidence.row(f);
      for (auto g : hm.incidence.facets_of(c.vertices.front())) {
        if (argmax(plus, hm.facet(g).normal()).intersects(fv)) good = false;
      }
    }
    if (good) {
      ++ok3;
    } else if (bad3.empty()) {
      bad3 = "; fails at " + v.to_string();
    }
  }
  r.add("normal-maps-part3", ok3 == hp.facet_count() && hp.facet_count() > 0,
        std::to_string(ok3) + "/" + std::to_string(hp.facet_count()) + " vertices of G+ pass" + bad3);

  // The worked instance v = (5,1,2,1).
  const Point v{Scalar(5), Scalar(1), Scalar(2), Scalar(1)};
  const auto i5 = minus.find("5-");
  if (!i5) {
    r.add("normal-maps-example", false, "vertex 5- missing");
    return r;
  }
  const NormalCone cone5 = normal_cone(minus, hm, *i5);
  std::set<Inequality> expected;
  for (int s : {1, -1}) {
    expected.insert(Inequality({-1, 2 * s, 0, 0}, 0).canonical());
    expected.insert(Inequality({-1, 0, 2 * s, 0}, 0).canonical());
    expected.insert(Inequality({-5, 0, 0, 2 * s}, 0).canonical());
  }
  r.add("normal-maps-cone5-", std::set<Inequality>(cone5.inequalities.begin(), cone5.inequalities.end()) == expected,
        "cone(5-) has " + std::to_string(cone5.inequalities.size()) + " facet inequalities");
  r.add("normal-maps-strict", contains_strictly(cone5, v), "(5,1,2,1) strictly inside cone(5-)");
  std::set<Point> gens(cone5.generators.begin(), cone5.generators.end()), want;
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      for (int c : {1, -1}) want.insert(Point{Scalar(2), Scalar(a), Scalar(b), Scalar(5 * c)});
    }
  }
  r.add("normal-maps-cone5-vertices", gens == want, std::to_string(gens.size()) + " generators, expected (2,+-1,+-1,+-5)");
  Bitset hosts(plus.size());
  for (const auto& u : cone5.generators) hosts |= argmax(plus, u);
  const Bitset fv = argmax(plus, v);
  const bool hosts_ok = names(plus, hosts) == "{7+,8+}" || names(plus, hosts) == "{8+,7+}";
  r.add("normal-maps-hosts", hosts_ok && !hosts.intersects(fv),
        "cones of G+ holding them: " + names(plus, hosts) + ", facet of v: " + names(plus, fv));
  return r;
}

// -------------------------------------------------------------- cube check

namespace {

bool isomorphic_to_cube(const Graph& g) {
  if (g.size() != 8 || g.edge_count() != 12) return false;
  std::vector<std::size_t> perm(8);
  for (std::size_t i = 0; i < 8; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < 8 && ok; ++a) {
      for (int bit = 0; bit < 3 && ok; ++bit) {
        const std::size_t b = a ^ (std::size_t{1} << bit);
        if (a < b && !g.has_edge(perm[a], perm[b])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

Report cube_vertex_figure_check(const VPolytope& p) {
  Report r;
  const HullResult hull = facet_enumeration(p);
  const DualGraph dual = dual_graph(hull);
  const VertexGraph vg = vertex_graph(hull);
  std::size_t ok = 0;
  std::string bad;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto fs = hull.incidence.facets_of(x);
    Graph local(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        if (dual.has_edge(fs[i], fs[j])) local.add_edge(i, j);
      }
    }
    bool good = fs.size() == 8 && isomorphic_to_cube(local) && vg.neighbors(x).size() == 6;
    for (auto w : vg.neighbors(x)) {
      if ((hull.incidence.column(x) & hull.incidence.column(w)).count() != 4) good = false;
    }
    if (good) {
      ++ok;
    } else if (bad.empty()) {
      bad = "; vertex " + p.label(x) + " lies on " + std::to_string(fs.size()) + " facets and " +
            std::to_string(vg.neighbors(x).size()) + " edges";
    }
  }
  r.add("cube-vertex-figures", ok == p.size(),
        std::to_string(ok) + "/" + std::to_string(p.size()) + " vertices on 8 facets meeting as a 3-cube" + bad);
  return r;
}

// ------------------------------------------------------------------ torus

TorusPoint torus_project(const Point& p) {
  if (p.dim() != 4) throw GeometryError("torus_project: expected a point in dimension 4");
  if (sgn(p[0]) == 0 && sgn(p[1]) == 0) throw GeometryError("torus_project: x1 = x2 = 0");
  if (sgn(p[2]) == 0 && sgn(p[3]) == 0) throw GeometryError("torus_project: x3 = x4 = 0");
  const auto angle = [](const Scalar& y, const Scalar& x) {
    double a = std::atan2(y.get_d(), x.get_d());
    if (a < 0) a += 2 * std::numbers::pi;
    return a;
  };
  return {angle(p[1], p[0]), angle(p[3], p[2])};
}

std::vector<std::string> torus_plot_data(const VPolytope& p, const std::string& prefix) {
  const HullResult hull = facet_enumeration(p);
  const DualGraph dual = dual_graph(hull);
  std::vector<std::string> labels, out;
  for (std::size_t f = 0; f < hull.facet_count(); ++f) {
    const Point n = hull.facet(f).normal();
    labels.push_back(prefix + n.to_string());
    const TorusPoint t = torus_project(n);
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.6f %.6f", t.x, t.y);
    out.push_back("TORUS " + labels.back() + buf);
  }
  for (const auto& [a, b] : dual.edges()) out.push_back("EDGE " + labels[a] + " " + labels[b]);
  return out;
}

}  // namespace hirsch
