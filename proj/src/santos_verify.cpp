// The verification suite for the 48-vertex prismatoid. Every check derives
// its result from the polytope passed in, so corrupted coordinates show up
// as FAIL lines rather than being masked by the embedded data.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "hirsch/normal_fan.hpp"
#include "hirsch/santos.hpp"

namespace hirsch::santos {

namespace {

// Runs one section; an exception fails the section instead of the suite.
void guarded(Report& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.add(name, false, std::string("error: ") + e.what());
  }
}

std::string set_string(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out + "}";
}

// The published neighbor lists use the opposite prime
// convention from the facet table on the families G through K.
std::string table_label(const std::string& printed) {
  const std::string letter = letter_of(printed);
  if (letter[0] < 'G' || letter[0] > 'K') return printed;
  const std::string signs = printed.substr(letter.size());
  return (letter.size() == 2 ? letter.substr(0, 1) : letter + "'") + signs;
}

struct NeighborList {
  const char* facet;
  std::vector<std::string> printed;
};

const std::vector<NeighborList>& neighbor_lists() {
  static const std::vector<NeighborList> lists = {
      {"B++++", {"A", "B+-++", "B++-+", "B+++-", "C++++", "D++++"}},
      {"C++++", {"B++++", "C++-+", "C+++-", "C'++++", "E++++", "F++++"}},
      {"D++++", {"B++++", "D+-++", "D+++-", "E++++", "G++++"}},
      {"E++++", {"C++++", "D++++", "E+++-", "F++++", "G++++"}},
      {"F++++", {"C++++", "E++++", "F+-++", "H'++++", "I'++++"}},
  };
  return lists;
}

const std::set<std::string>& quotient_edges() {
  static const std::set<std::string> edges = {"AB", "BC", "BD", "CE", "CF", "DE", "DG", "EF", "EG",
                                              "FH", "FI", "GH", "GJ", "HI", "HJ", "IK", "JK", "KL"};
  return edges;
}

std::vector<Inequality> plus_base_inequalities() {
  std::vector<Inequality> out;
  for (const auto& base : {std::vector<int>{5, 1, 2, 1}, std::vector<int>{1, 5, 1, 2}}) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<Scalar> c(4);
      for (std::size_t i = 0; i < 4; ++i) c[i] = ((mask >> i) & 1u) ? -base[i] : base[i];
      out.push_back(Inequality(std::move(c), Scalar(90)).canonical());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> signed_points(const std::vector<std::vector<int>>& bases) {
  std::vector<Point> out;
  for (const auto& base : bases) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      Point p = Point::zero(4);
      for (std::size_t i = 0; i < 4; ++i) p[i] = ((mask >> i) & 1u) ? -base[i] : base[i];
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Report verify_santos(const VPolytope& q) {
  Report r;

  guarded(r, "embedded-rows", [&] {
    const VPolytope table = vertices();
    std::size_t differing = 0;
    std::string first;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto j = q.find(table.label(i));
      if (!j || q.vertices[*j] != table.vertices[i]) {
        if (first.empty()) first = " first " + table.label(i);
        ++differing;
      }
    }
    r.add("embedded-rows", q.size() == 48 && differing == 0,
          std::to_string(q.size()) + " points, " + std::to_string(differing) + " rows differ from the table" + first);
  });
  guarded(r, "vertices-certified", [&] {
    certify_vertices(q);
    r.add("vertices-certified", true, "all " + std::to_string(q.size()) + " points are vertices");
  });

  Analysis a;
  bool have_analysis = false;
  guarded(r, "facet-census", [&] {
    a = analyze(q);
    have_analysis = true;
    std::vector<Inequality> expected;
    for (const auto& e : expected_facets()) expected.push_back(e.ineq);
    const auto& got = a.hull.hpoly.inequalities;
    std::vector<Inequality> missing, extra;
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    r.add("facet-count", got.size() == 322, std::to_string(got.size()) + " facets");
    r.add("facet-census", missing.empty() && extra.empty(),
          std::to_string(missing.size()) + " missing, " + std::to_string(extra.size()) + " unexpected");
    r.add("facet-table-size", expected.size() == 322 &&
                                  std::adjacent_find(expected.begin(), expected.end()) == expected.end(),
          std::to_string(expected.size()) + " distinct table inequalities");
  });
  if (!have_analysis) return r;

  std::optional<Prismatoid> prism;
  guarded(r, "bases", [&] {
    prism = make_prismatoid(q, Inequality({0, 0, 0, 0, 1}, 1), Inequality({0, 0, 0, 0, -1}, 1));
    std::vector<std::string> plus;
    for (auto v : prism->plus_vertices()) plus.push_back(q.label(v));
    std::vector<std::string> expected;
    for (int i = 1; i <= 24; ++i) expected.push_back(std::to_string(i) + "+");
    std::sort(plus.begin(), plus.end());
    std::sort(expected.begin(), expected.end());
    r.add("bases", plus == expected, "plus base holds " + std::to_string(plus.size()) + " vertices, all labeled i+");
  });

  guarded(r, "width", [&] {
    if (!a.facet_A || !a.facet_L) throw GeometryError("base facets A and L not found");
    const auto dist = bfs_distances(a.dual, *a.facet_A);
    const int w = dist[*a.facet_L];
    const auto path = shortest_path(a.dual, *a.facet_A, *a.facet_L);
    std::vector<std::string> names;
    for (auto f : path) names.push_back(a.facet_labels[f]);
    r.add("width", w == 6, "dual distance A-L = " + std::to_string(w));
    r.add("width-path", path.size() == 7, "path " + set_string(names));
    r.add("no-5-step-path", w > 5, "BFS finds no path of 5 or fewer steps");
    if (prism) r.add("no-dstep-property", !has_dstep_property(*prism), "width exceeds dimension 5");
  });

  SymmetryGroup sigma, sigma_plus;
  guarded(r, "groups", [&] {
    std::tie(sigma, sigma_plus) = symmetry_groups();
    r.add("sigma-order", sigma.order() == 64, std::to_string(sigma.order()));
    r.add("sigma-plus-order", sigma_plus.order() == 32, std::to_string(sigma_plus.order()));
    std::size_t vperm = 0, fperm = 0;
    for (const auto& g : sigma.elements) {
      if (vertex_permutation(g, q)) ++vperm;
      if (facet_permutation(g, a.hull)) ++fperm;
    }
    r.add("sigma-permutes-vertices", vperm == sigma.order(),
          std::to_string(vperm) + " of " + std::to_string(sigma.order()) + " elements");
    r.add("sigma-permutes-facets", fperm == sigma.order(),
          std::to_string(fperm) + " of " + std::to_string(sigma.order()) + " elements");

    const OrthMap s = base_swap();
    const auto perm = vertex_permutation(s, q);
    bool plus_to_minus = perm.has_value();
    for (int i = 1; i <= 24 && plus_to_minus; ++i) {
      const auto from = q.find(std::to_string(i) + "+");
      const auto to = q.find(std::to_string(i) + "-");
      plus_to_minus = from && to && (*perm)[*from] == *to;
    }
    r.add("base-swap-i+-to-i-", plus_to_minus, "vertex i+ goes to i-");
    const OrthMap sq = s * s;
    r.add("base-swap-not-involution", sq != OrthMap::identity(5) && sigma_plus.contains(sq) && !sigma_plus.contains(s),
          "its square is a nontrivial element of the index-two subgroup");
  });

  guarded(r, "orbits", [&] {
    const auto plus_orbits = facet_orbits(sigma_plus, a.hull);
    std::size_t big = 0, single = 0;
    bool one_family = true;
    for (const auto& o : plus_orbits) {
      if (o.size() == 32) ++big;
      if (o.size() == 1) ++single;
      std::set<std::string> letters;
      for (auto f : o) {
        std::string l = letter_of(a.facet_labels[f]);
        if (l.size() == 2) l.pop_back();
        letters.insert(l);
      }
      one_family = one_family && letters.size() == 1;
    }
    r.add("sigma-plus-orbits", plus_orbits.size() == 12 && big == 10 && single == 2 && one_family,
          std::to_string(plus_orbits.size()) + " orbits: " + std::to_string(big) + " of size 32, " +
              std::to_string(single) + " singletons, one letter each");

    const auto orbits = facet_orbits(sigma, a.hull);
    std::set<std::string> pairs;
    for (const auto& o : orbits) {
      std::set<char> letters;
      for (auto f : o) letters.insert(a.facet_labels[f][0]);
      std::string key(letters.begin(), letters.end());
      pairs.insert(key);
    }
    const std::set<std::string> expected = {"AL", "BK", "CJ", "DI", "EH", "FG"};
    std::vector<std::string> got(pairs.begin(), pairs.end());
    r.add("sigma-orbits", orbits.size() == 6 && pairs == expected,
          std::to_string(orbits.size()) + " orbits " + set_string(got));
  });

  guarded(r, "neighbors", [&] {
    for (const auto& list : neighbor_lists()) {
      const auto f = a.facet_by_label(list.facet);
      if (!f) throw GeometryError(std::string("facet ") + list.facet + " not found");
      std::vector<std::string> got, expected;
      for (auto g : a.dual.neighbors(*f)) got.push_back(a.facet_labels[g]);
      for (const auto& p : list.printed) expected.push_back(table_label(p));
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      r.add(std::string("neighbors-") + list.facet, got == expected, set_string(got));
    }
  });

  guarded(r, "quotient", [&] {
    const OrbitQuotient oq = orbit_adjacency_graph(a, sigma_plus);
    std::set<std::string> edges;
    for (const auto& [x, y] : oq.graph.edges()) {
      std::string e = oq.names[x] + oq.names[y];
      std::sort(e.begin(), e.end());
      edges.insert(e);
    }
    std::vector<std::string> listed(edges.begin(), edges.end());
    r.add("quotient-edges", edges == quotient_edges(), std::to_string(edges.size()) + " " + set_string(listed));
    r.add("quotient-distance", oq.distance_A_L == 6, "orbit A to orbit L: " + std::to_string(oq.distance_A_L));
  });

  guarded(r, "bidimension", [&] {
    const std::map<char, std::pair<int, int>> expected = {
        {'A', {4, -1}}, {'B', {3, 0}}, {'C', {2, 1}}, {'D', {2, 1}}, {'E', {1, 2}}, {'F', {1, 2}},
        {'G', {2, 1}}, {'H', {2, 1}}, {'I', {1, 2}}, {'J', {1, 2}}, {'K', {0, 3}}, {'L', {-1, 4}}};
    std::size_t ok = 0;
    std::string bad;
    for (std::size_t f = 0; f < a.hull.facet_count(); ++f) {
      const auto it = expected.find(a.facet_labels[f][0]);
      const auto bd = bidimension(a, f);
      if (it != expected.end() && it->second == bd) {
        ++ok;
      } else if (bad.empty()) {
        bad = ", first mismatch " + a.facet_labels[f];
      }
    }
    r.add("bidimensions", ok == a.hull.facet_count(),
          std::to_string(ok) + " of " + std::to_string(a.hull.facet_count()) + " facets" + bad);
  });

  guarded(r, "incidence-table", [&] { r.append(verify_incidence_table(q)); });
  guarded(r, "prism", [&] { r.append(verify_prism_structure(q)); });

  guarded(r, "plus-base", [&] {
    const VPolytope plus = base_polytope(q, true);
    const HullResult hp = facet_enumeration(plus);
    r.add("plus-base-facets", hp.hpoly.inequalities == plus_base_inequalities(),
          std::to_string(hp.facet_count()) + " facets against the 32 of the two cross-polytopes");
    std::size_t on = 0;
    for (const auto& n : facet_normals(hp)) {
      if (n.dim() == 4 && n[0] * n[0] + n[1] * n[1] == 26 && n[2] * n[2] + n[3] * n[3] == 5) ++on;
    }
    r.add("plus-normals-on-torus", on == 32 && hp.facet_count() == 32, std::to_string(on) + " normals on the torus");
    r.append(cube_vertex_figure_check(plus));

    auto minus_normals = facet_normals(facet_enumeration(base_polytope(q, false)));
    std::sort(minus_normals.begin(), minus_normals.end());
    r.add("minus-normals", minus_normals == signed_points({{1, 2, 5, 1}, {2, 1, 1, 5}}),
          std::to_string(minus_normals.size()) + " normals of the minus base");
  });

  guarded(r, "minkowski", [&] {
    if (!prism) throw GeometryError("no prismatoid");
    const ProjectedBases b = projected_bases(*prism);
    const MinkowskiSum m = minkowski_sum(b.plus, b.minus);
    r.add("minkowski-facets", m.hull.facet_count() == 320, std::to_string(m.hull.facet_count()) + " facets");
    r.add("minkowski-decomposition", decomposition_is_exact(m, b.plus, b.minus),
          "every facet is the sum of its two decomposition faces");
    r.append(sum_dual_graph_check(*prism, m, b));
    const PairDStep pd = pair_dstep_property(m, 4, 4, 5);
    r.add("pair-dstep", !pd.property && pd.min_facets == 5,
          std::string(pd.property ? "has" : "lacks") + " the property, shortest sequence " +
              std::to_string(pd.min_facets) + " facets");
    r.append(transversality_check(*prism));

    const VPolytope slice = intermediate_slice(*prism, Scalar(1, 2));
    r.add("slice-is-weighted-sum", slice.vertices == weighted_base_sum(*prism, Scalar(1, 2)).vertices,
          std::to_string(slice.size()) + " vertices at height 0");
  });

  guarded(r, "normal-map-position", [&] { r.append(normal_map_position_check(q)); });

  guarded(r, "polar-spindle", [&] {
    const VPolytope p = polar(q);
    const HullResult hp = facet_enumeration(p);
    const auto sp = is_spindle(hp);
    r.add("polar-spindle", p.size() == 322 && hp.facet_count() == 48 && sp && sp->length == 6,
          std::to_string(p.size()) + " vertices, " + std::to_string(hp.facet_count()) + " facets, length " +
              (sp ? std::to_string(sp->length) : std::string("none")));
  });

  return r;
}

}  // namespace hirsch::santos
