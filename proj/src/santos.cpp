#include "hirsch/santos.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hirsch::santos {

// ------------------------------------------------------------ facet table

Inequality family_inequality(const FacetFamily& fam, const std::vector<int>& signs) {
  if (signs.size() != fam.terms.size()) throw GeometryError("family_inequality: wrong sign count for " + fam.letter);
  // constant + k5 x5 >= sum  <=>  sum - k5 x5 <= constant
  std::vector<Scalar> coeffs(5, Scalar(0));
  for (std::size_t t = 0; t < fam.terms.size(); ++t) {
    const auto& [c, var] = fam.terms[t];
    coeffs[var] = signs[t] > 0 ? c : Scalar(-c);
  }
  coeffs[4] = -fam.k5;
  return Inequality(std::move(coeffs), fam.constant).canonical();
}

std::vector<LabeledFacet> expected_facets() {
  std::vector<LabeledFacet> out;
  for (const auto& fam : facet_families()) {
    if (fam.terms.empty()) {
      out.push_back({fam.letter, family_inequality(fam, {})});
      continue;
    }
    const std::size_t k = fam.terms.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> signs(k);
      std::string label = fam.letter;
      for (std::size_t t = 0; t < k; ++t) {
        // The most significant bit is the first term, so "++++" comes first.
        const bool minus = (mask >> (k - 1 - t)) & 1u;
        signs[t] = minus ? -1 : 1;
        label += minus ? '-' : '+';
      }
      out.push_back({std::move(label), family_inequality(fam, signs)});
    }
  }
  std::sort(out.begin(), out.end(), [](const LabeledFacet& a, const LabeledFacet& b) { return a.ineq < b.ineq; });
  return out;
}

std::string letter_of(const std::string& label) {
  std::size_t end = 1;
  if (label.size() > 1 && label[1] == '\'') end = 2;
  return label.substr(0, end);
}

// --------------------------------------------------------------- symmetry

OrthMap base_swap() { return OrthMap::signed_permutation({3, 2, 0, 1, 4}, {1, 1, 1, 1, -1}); }

OrthMap literal_swap() { return OrthMap::signed_permutation({2, 3, 1, 0, 4}, {1, 1, 1, 1, -1}); }

std::vector<OrthMap> plus_generators() {
  std::vector<OrthMap> gens;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<int> signs(5, 1);
    signs[i] = -1;
    gens.push_back(OrthMap::signed_permutation({0, 1, 2, 3, 4}, signs));
  }
  gens.push_back(OrthMap::signed_permutation({1, 0, 3, 2, 4}, {1, 1, 1, 1, 1}));
  return gens;
}

bool SymmetryGroup::contains(const OrthMap& m) const { return std::binary_search(elements.begin(), elements.end(), m); }

SymmetryGroup generate_group(const std::vector<OrthMap>& generators) {
  if (generators.empty()) throw GeometryError("generate_group: no generators");
  std::set<OrthMap> seen{OrthMap::identity(generators.front().dim())};
  std::deque<OrthMap> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const OrthMap g = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      OrthMap h = s * g;
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return SymmetryGroup{generators, std::vector<OrthMap>(seen.begin(), seen.end())};
}

std::pair<SymmetryGroup, SymmetryGroup> symmetry_groups() {
  auto plus = generate_group(plus_generators());
  auto gens = plus_generators();
  gens.push_back(base_swap());
  return {generate_group(gens), std::move(plus)};
}

std::optional<std::vector<std::size_t>> vertex_permutation(const OrthMap& m, const VPolytope& p) {
  std::map<Point, std::size_t> index;
  for (std::size_t i = 0; i < p.size(); ++i) index.emplace(p.vertices[i], i);
  std::vector<std::size_t> perm(p.size());
  std::vector<bool> hit(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto it = index.find(apply_map(m, p.vertices[i]));
    if (it == index.end() || hit[it->second]) return std::nullopt;
    perm[i] = it->second;
    hit[it->second] = true;
  }
  return perm;
}

std::optional<std::vector<std::size_t>> facet_permutation(const OrthMap& m, const HullResult& hull) {
  std::vector<std::size_t> perm(hull.facet_count());
  std::vector<bool> hit(hull.facet_count(), false);
  for (std::size_t f = 0; f < hull.facet_count(); ++f) {
    const auto img = hull.find_facet(apply_map_ineq(m, hull.facet(f)));
    if (!img || hit[*img]) return std::nullopt;
    perm[f] = *img;
    hit[*img] = true;
  }
  return perm;
}

std::vector<std::vector<std::size_t>> facet_orbits(const SymmetryGroup& g, const HullResult& hull) {
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& s : g.generators) {
    auto p = facet_permutation(s, hull);
    if (!p) throw GeometryError("facet_orbits: a generator does not permute the facets");
    perms.push_back(std::move(*p));
  }
  const std::size_t m = hull.facet_count();
  std::vector<bool> done(m, false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t f = 0; f < m; ++f) {
    if (done[f]) continue;
    std::vector<std::size_t> orbit{f};
    done[f] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& p : perms) {
        const std::size_t img = p[orbit[k]];
        if (!done[img]) {
          done[img] = true;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// --------------------------------------------------------------- analysis

std::optional<std::size_t> Analysis::facet_by_label(const std::string& label) const {
  for (std::size_t f = 0; f < facet_labels.size(); ++f) {
    if (facet_labels[f] == label) return f;
  }
  return std::nullopt;
}

Analysis analyze(const VPolytope& p) {
  Analysis a;
  a.poly = p;
  a.hull = facet_enumeration(p);
  a.dual = dual_graph(a.hull);
  const auto expected = expected_facets();
  for (std::size_t f = 0; f < a.hull.facet_count(); ++f) {
    const auto it = std::lower_bound(expected.begin(), expected.end(), a.hull.facet(f),
                                     [](const LabeledFacet& e, const Inequality& i) { return e.ineq < i; });
    const bool found = it != expected.end() && it->ineq == a.hull.facet(f);
    a.facet_labels.push_back(found ? it->label : "?");
  }
  a.facet_A = a.facet_by_label("A");
  a.facet_L = a.facet_by_label("L");
  return a;
}

Prismatoid santos_prismatoid() {
  const VPolytope q = vertices();
  const Inequality plus({0, 0, 0, 0, 1}, 1);
  const Inequality minus({0, 0, 0, 0, -1}, 1);
  return make_prismatoid(q, plus, minus);
}

VPolytope base_polytope(const VPolytope& q, bool plus) {
  VPolytope out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Scalar& last = q.vertices[i][q.ambient_dim() - 1];
    if ((plus && last == 1) || (!plus && last == -1)) {
      out.vertices.push_back(q.vertices[i].without(q.ambient_dim() - 1));
      out.labels.push_back(q.label(i));
    }
  }
  return out;
}

namespace {

int affine_dim_of(const VPolytope& p, const Bitset& subset) {
  if (subset.none()) return -1;
  std::vector<Point> pts;
  for (auto v = subset.find_first(); v != Bitset::npos; v = subset.find_next(v)) pts.push_back(p.vertices[v]);
  return affine_rank(pts);
}

}  // namespace

std::pair<int, int> bidimension(const Analysis& a, std::size_t facet) {
  if (!a.facet_A || !a.facet_L) throw GeometryError("bidimension: bases not identified");
  const Bitset& row = a.hull.incidence.row(facet);
  return {affine_dim_of(a.poly, row & a.hull.incidence.row(*a.facet_A)),
          affine_dim_of(a.poly, row & a.hull.incidence.row(*a.facet_L))};
}

OrbitQuotient orbit_adjacency_graph(const Analysis& a, const SymmetryGroup& plus_group) {
  OrbitQuotient out;
  out.orbits = facet_orbits(plus_group, a.hull);
  std::vector<std::size_t> orbit_of(a.hull.facet_count());
  for (std::size_t o = 0; o < out.orbits.size(); ++o) {
    for (auto f : out.orbits[o]) orbit_of[f] = o;
    std::string name = letter_of(a.facet_labels[out.orbits[o].front()]);
    if (name.size() == 2) name.pop_back();
    out.names.push_back(name);
  }
  out.graph = Graph(out.orbits.size());
  for (const auto& [f, g] : a.dual.edges()) {
    if (orbit_of[f] != orbit_of[g]) out.graph.add_edge(orbit_of[f], orbit_of[g]);
  }
  if (a.facet_A && a.facet_L) {
    out.distance_A_L = bfs_distances(out.graph, orbit_of[*a.facet_A])[orbit_of[*a.facet_L]];
  }
  return out;
}

// ----------------------------------------------------------- table checks

namespace {

struct IncidenceRow {
  const char* label;
  std::vector<std::string> tight;
};

const std::vector<IncidenceRow>& incidence_table() {
  static const std::vector<IncidenceRow> rows = {
      {"B++++", {"1+", "5+", "9+", "13+", "17+", "21+", "5-"}},
      {"C++++", {"9+", "13+", "17+", "21+", "5-", "13-"}},
      {"D++++", {"5+", "13+", "17+", "5-", "17-"}},
      {"E++++", {"13+", "17+", "5-", "13-", "17-"}},
      {"F++++", {"13+", "21+", "5-", "13-", "17-"}},
  };
  return rows;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out + "}";
}

const FacetFamily& family(const std::string& letter) {
  for (const auto& f : facet_families()) {
    if (f.letter == letter) return f;
  }
  throw GeometryError("no facet family " + letter);
}

}  // namespace

Report verify_incidence_table(const VPolytope& q) {
  Report r;
  for (const auto& row : incidence_table()) {
    const std::string letter = letter_of(row.label);
    const Inequality ineq = family_inequality(family(letter), {1, 1, 1, 1});
    std::vector<std::string> tight, violated;
    std::vector<Point> tight_pts;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Evaluation e = evaluate(ineq, q.vertices[i]);
      if (e.sign < 0) violated.push_back(q.label(i));
      if (e.sign == 0) {
        tight.push_back(q.label(i));
        tight_pts.push_back(q.vertices[i]);
      }
    }
    auto expected = row.tight;
    auto got = tight;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    const int rank = tight_pts.empty() ? -1 : affine_rank(tight_pts);
    const std::string name = std::string("incidence-") + row.label;
    r.add(name + "-valid", violated.empty(), violated.empty() ? "all vertices satisfy it" : "violated at " + join(violated));
    r.add(name + "-tight", got == expected, "tight " + join(tight));
    r.add(name + "-rank", rank == 4, "affine rank " + std::to_string(rank));
  }
  return r;
}

Report verify_prism_structure(const VPolytope& q) {
  Report r;
  const auto v = [&](const char* l) { return q.vertices.at(q.index_of(l)); };
  const Point o{Scalar(-30), Scalar(0), Scalar(120), Scalar(0), Scalar(1)};
  const Point r1 = Scalar(8, 3) * v("5+") - Scalar(5, 3) * v("1+");
  const Point r2 = Scalar(3) * v("17+") - Scalar(2) * v("9+");
  const Point r3 = Scalar(4) * v("13+") - Scalar(3) * v("21+");
  r.add("collision-1-5", r1 == o, "(8/3)v5+ - (5/3)v1+ = " + r1.to_string());
  r.add("collision-9-17", r2 == o, "3v17+ - 2v9+ = " + r2.to_string());
  r.add("collision-21-13", r3 == o, "4v13+ - 3v21+ = " + r3.to_string());
  const Point lhs = Scalar(2) * v("9+") + Scalar(4) * v("13+");
  const Point rhs = Scalar(3) * v("17+") + Scalar(3) * v("21+");
  r.add("quadrilateral-9-13-17-21", lhs == rhs, "2v9+ + 4v13+ = " + lhs.to_string() + ", 3v17+ + 3v21+ = " + rhs.to_string());
  return r;
}

}  // namespace hirsch::santos
