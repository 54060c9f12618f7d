#include "hirsch/constructions.hpp"

#include <algorithm>
#include <random>

namespace hirsch {

// -------------------------------------------------------- one-point suspension

VPolytope one_point_suspension(const VPolytope& q, std::size_t v) {
  if (v >= q.size()) throw GeometryError("one_point_suspension: no vertex " + std::to_string(v));
  const HullResult hull = facet_enumeration(q);
  const auto ext = extreme_point_indices(q, hull);
  if (!std::binary_search(ext.begin(), ext.end(), v)) {
    throw GeometryError("one_point_suspension: point " + q.label(v) + " is not a vertex");
  }
  VPolytope out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i == v) continue;
    out.vertices.push_back(q.vertices[i].with(Scalar(0)));
    if (!q.labels.empty()) out.labels.push_back(q.labels[i]);
  }
  out.vertices.push_back(q.vertices[v].with(Scalar(1)));
  out.vertices.push_back(q.vertices[v].with(Scalar(-1)));
  if (!q.labels.empty()) {
    out.labels.push_back(q.labels[v] + "u");
    out.labels.push_back(q.labels[v] + "w");
  }
  return out;
}

namespace {

/// Vertex set of the lift of a facet row of q, over the suspension's vertices.
Bitset lift_row(const Bitset& row, std::size_t v, bool with_u, bool with_w) {
  const std::size_t n = row.size();
  Bitset out(n + 1);
  for (auto i = row.find_first(); i != Bitset::npos; i = row.find_next(i)) {
    if (i != v) out.set(i < v ? i : i - 1);
  }
  if (with_u) out.set(n - 1);
  if (with_w) out.set(n);
  return out;
}

std::vector<Bitset> predicted_rows(const HullResult& hull, std::size_t v) {
  std::vector<Bitset> rows;
  for (std::size_t f = 0; f < hull.facet_count(); ++f) {
    const Bitset& row = hull.incidence.row(f);
    if (row[v]) {
      rows.push_back(lift_row(row, v, true, true));
    } else {
      rows.push_back(lift_row(row, v, true, false));
      rows.push_back(lift_row(row, v, false, true));
    }
  }
  return rows;
}

}  // namespace

bool ops_facet_formula_holds(const VPolytope& q, std::size_t v) {
  const HullResult hull = facet_enumeration(q);
  const HullResult susp = facet_enumeration(one_point_suspension(q, v));
  auto expected = predicted_rows(hull, v);
  std::vector<Bitset> got;
  for (std::size_t f = 0; f < susp.facet_count(); ++f) got.push_back(susp.incidence.row(f));
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  return expected == got;
}

std::size_t lifted_facet(const HullResult& q, const HullResult& suspension, std::size_t v, std::size_t f,
                         bool use_w) {
  const Bitset& row = q.incidence.row(f);
  const Bitset want = row[v] ? lift_row(row, v, true, true) : lift_row(row, v, !use_w, use_w);
  for (std::size_t g = 0; g < suspension.facet_count(); ++g) {
    if (suspension.incidence.row(g) == want) return g;
  }
  throw GeometryError("lifted_facet: the suspension has no facet over facet " + std::to_string(f));
}

namespace {

struct OpsGraphs {
  HullResult hull, susp;
  DualGraph dq, ds;
};

OpsGraphs ops_graphs(const VPolytope& q, std::size_t v) {
  OpsGraphs g{facet_enumeration(q), facet_enumeration(one_point_suspension(q, v)), {}, {}};
  g.dq = dual_graph(g.hull);
  g.ds = dual_graph(g.susp);
  return g;
}

bool lifts_far_enough(const OpsGraphs& g, std::size_t v, std::size_t f1, const std::vector<int>& from_f1,
                      std::size_t f2) {
  for (bool w1 : {false, true}) {
    const auto l1 = lifted_facet(g.hull, g.susp, v, f1, w1);
    const auto dist = bfs_distances(g.ds, l1);
    for (bool w2 : {false, true}) {
      const auto l2 = lifted_facet(g.hull, g.susp, v, f2, w2);
      if (dist[l2] < from_f1[f2]) return false;
    }
  }
  return true;
}

}  // namespace

bool ops_distance_check(const VPolytope& q, std::size_t v, std::size_t f1, std::size_t f2) {
  const OpsGraphs g = ops_graphs(q, v);
  return lifts_far_enough(g, v, f1, bfs_distances(g.dq, f1), f2);
}

bool ops_distance_check_all(const VPolytope& q, std::size_t v) {
  const OpsGraphs g = ops_graphs(q, v);
  for (std::size_t f1 = 0; f1 < g.hull.facet_count(); ++f1) {
    const auto from_f1 = bfs_distances(g.dq, f1);
    for (std::size_t f2 = 0; f2 < g.hull.facet_count(); ++f2) {
      if (!lifts_far_enough(g, v, f1, from_f1, f2)) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------------ pushing

std::optional<std::vector<std::size_t>> push_facet_map(const HullResult& q, const HullResult& pushed,
                                                       std::size_t v) {
  // The pushed vertex keeps index v, so a facet's vertex set reads the same
  // in both polytopes once v' stands for v.
  (void)v;
  std::vector<std::size_t> image(pushed.facet_count());
  for (std::size_t f = 0; f < pushed.facet_count(); ++f) {
    const Bitset& s = pushed.incidence.row(f);
    std::size_t hits = 0;
    for (std::size_t g = 0; g < q.facet_count(); ++g) {
      if (s.is_subset_of(q.incidence.row(g))) {
        image[f] = g;
        ++hits;
      }
    }
    if (hits != 1) return std::nullopt;
  }
  return image;
}

PushResult push_vertex(const VPolytope& q, std::size_t v, const std::vector<std::size_t>& face, std::uint64_t seed,
                       const PushPredicate& generic, int max_halvings) {
  if (face.empty()) throw GeometryError("push_vertex: empty target face");
  if (v >= q.size()) throw GeometryError("push_vertex: no vertex " + std::to_string(v));
  const HullResult base = facet_enumeration(q);
  const DualGraph base_dual = dual_graph(base);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 16);
  Point target = Point::zero(q.ambient_dim());
  Scalar total(0);
  for (auto i : face) {
    const Scalar w(weight(rng));
    target += w * q.vertices.at(i);
    total += w;
  }
  target *= Scalar(1) / total;

  Scalar t(1);
  for (int h = 0; h <= max_halvings; ++h, t /= 2) {
    VPolytope cand = q;
    cand.vertices[v] = q.vertices[v] + t * (target - q.vertices[v]);
    HullResult hull;
    try {
      hull = facet_enumeration(cand);
    } catch (const GeometryError&) {
      continue;  // collided with another vertex
    }
    if (extreme_point_indices(cand, hull).size() != cand.size()) continue;
    const auto image = push_facet_map(base, hull, v);
    if (!image) continue;
    bool simplicial_map = true;
    const DualGraph dual = dual_graph(hull);
    for (const auto& [a, b] : dual.edges()) {
      const auto fa = (*image)[a], fb = (*image)[b];
      if (fa != fb && !base_dual.has_edge(fa, fb)) {
        simplicial_map = false;
        break;
      }
    }
    if (!simplicial_map) continue;
    if (generic && !generic(cand, hull)) continue;
    return PushResult{std::move(cand), std::move(hull), target, h};
  }
  throw InfeasibleError("push_vertex: no valid position after " + std::to_string(max_halvings) + " halvings");
}

// ------------------------------------------------------ products and blends

VPolytope product(const VPolytope& a, const VPolytope& b) {
  VPolytope out;
  const bool labeled = !a.labels.empty() || !b.labels.empty();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::vector<Scalar> c = a.vertices[i].coords();
      c.insert(c.end(), b.vertices[j].coords().begin(), b.vertices[j].coords().end());
      out.vertices.emplace_back(std::move(c));
      if (labeled) out.labels.push_back(a.label(i) + "*" + b.label(j));
    }
  }
  return out;
}

VPolytope power(const VPolytope& p, int k) {
  if (k < 1) throw GeometryError("power: exponent must be at least 1");
  VPolytope out = p;
  for (int i = 1; i < k; ++i) out = product(out, p);
  return out;
}

namespace {

struct SimpleVertex {
  std::vector<std::size_t> facets;                 ///< the d facets through the vertex, increasing
  std::vector<std::pair<std::size_t, std::size_t>> leaving;  ///< (neighbor, position of the facet it leaves)
};

SimpleVertex simple_vertex(const HullResult& hull, const VertexGraph& g, std::size_t v) {
  SimpleVertex s;
  s.facets = hull.incidence.facets_of(v);
  if (s.facets.size() != static_cast<std::size_t>(hull.dim)) throw GeometryError("blend_graph: vertex is not simple");
  for (auto u : g.neighbors(v)) {
    std::size_t pos = s.facets.size();
    for (std::size_t i = 0; i < s.facets.size(); ++i) {
      if (!hull.incidence.contains(s.facets[i], u)) {
        if (pos != s.facets.size()) throw GeometryError("blend_graph: edge leaves more than one facet");
        pos = i;
      }
    }
    if (pos == s.facets.size()) throw GeometryError("blend_graph: edge leaves no facet");
    s.leaving.emplace_back(u, pos);
  }
  return s;
}

}  // namespace

BlendGraph blend_graph(const VPolytope& p1, std::size_t v1, const VPolytope& p2, std::size_t v2,
                       const std::vector<std::size_t>& matching) {
  const HullResult h1 = facet_enumeration(certify_vertices(p1));
  const HullResult h2 = facet_enumeration(certify_vertices(p2));
  if (h1.dim != h2.dim) throw GeometryError("blend_graph: dimensions differ");
  if (!is_simple(h1) || !is_simple(h2)) throw GeometryError("blend_graph: inputs must be simple polytopes");
  const auto d = static_cast<std::size_t>(h1.dim);
  std::vector<std::size_t> check = matching;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) throw GeometryError("blend_graph: matching is not a permutation");
  }
  if (matching.size() != d) throw GeometryError("blend_graph: matching must pair the " + std::to_string(d) + " facets");

  const VertexGraph g1 = vertex_graph(h1);
  const VertexGraph g2 = vertex_graph(h2);
  const SimpleVertex s1 = simple_vertex(h1, g1, v1);
  const SimpleVertex s2 = simple_vertex(h2, g2, v2);

  std::vector<std::size_t> old1, old2;
  const Graph r1 = g1.without({v1}, &old1);
  const Graph r2 = g2.without({v2}, &old2);
  BlendGraph out;
  out.dim = h1.dim;
  out.facet_count = h1.facet_count() + h2.facet_count() - d;
  out.graph = Graph(r1.size() + r2.size());
  for (const auto& [a, b] : r1.edges()) out.graph.add_edge(a, b);
  for (const auto& [a, b] : r2.edges()) out.graph.add_edge(r1.size() + a, r1.size() + b);
  const auto renum = [](const std::vector<std::size_t>& old, std::size_t x) {
    return static_cast<std::size_t>(std::lower_bound(old.begin(), old.end(), x) - old.begin());
  };
  for (const auto& [u1, pos1] : s1.leaving) {
    for (const auto& [u2, pos2] : s2.leaving) {
      if (matching[pos1] == pos2) out.graph.add_edge(renum(old1, u1), r1.size() + renum(old2, u2));
    }
  }
  for (auto i : old1) out.labels.push_back("1:" + p1.label(i));
  for (auto i : old2) out.labels.push_back("2:" + p2.label(i));
  return out;
}

// ------------------------------------------------------------------ excess

ExcessReport hirsch_excess(long d, long n, long l) {
  if (d < 1 || n <= d || l < 0) throw std::invalid_argument("hirsch_excess: need n > d >= 1 and l >= 0");
  Scalar e = Scalar(l) / Scalar(n - d) - 1;
  e.canonicalize();
  return ExcessReport{d, n, l, e};
}

bool is_hirsch(long d, long n, long l) {
  hirsch_excess(d, n, l);
  return l <= n - d;
}

FamilyParameters family_parameters(long d, long n, long l, long k, long j) {
  if (k < 1 || j < 1) throw std::invalid_argument("family_parameters: k and j must be positive");
  if (is_hirsch(d, n, l)) throw std::invalid_argument("family_parameters: input satisfies the Hirsch bound");
  FamilyParameters f;
  f.dim = k * d;
  f.facets = j * (k * n - k * d) + k * d;
  f.diameter = j * (k * l - 1) + 1;
  f.excess = hirsch_excess(f.dim, f.facets, f.diameter).excess;
  f.epsilon = hirsch_excess(d, n, l).excess;
  f.b = l - n + d;
  f.limit = f.epsilon - Scalar(1) / Scalar(k * (n - d));
  f.bound = (1 - Scalar(1) / Scalar(k)) * f.epsilon;
  f.refined_bound = (1 - Scalar(1) / Scalar(f.b * k)) * f.epsilon;
  return f;
}

}  // namespace hirsch
