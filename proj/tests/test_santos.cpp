#include <doctest.h>

#include <map>
#include <set>

#include "hirsch/santos.hpp"

using namespace hirsch;
using namespace hirsch::santos;

namespace {

const Analysis& shared() {
  static const Analysis a = analyze(vertices());
  return a;
}

Inequality table_facet(const std::string& label) {
  for (const auto& f : expected_facets()) {
    if (f.label == label) return f.ineq;
  }
  FAIL("no facet " << label);
  return Inequality({1}, 0);
}

}  // namespace

TEST_CASE("embedded coordinates") {
  const VPolytope q = vertices();
  REQUIRE(q.size() == 48);
  CHECK(q.vertices[q.index_of("5+")] == Point{Scalar(0), Scalar(0), Scalar(45), Scalar(0), Scalar(1)});
  CHECK(q.vertices[q.index_of("1+")] == Point{Scalar(18), Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
  std::set<std::string> labels(q.labels.begin(), q.labels.end());
  CHECK(labels.size() == 48);
  for (int i = 1; i <= 24; ++i) {
    CHECK(q.vertices[q.index_of(std::to_string(i) + "+")][4] == 1);
    CHECK(q.vertices[q.index_of(std::to_string(i) + "-")][4] == -1);
  }
}

TEST_CASE("facet table") {
  const auto fs = expected_facets();
  CHECK(fs.size() == 2 + 20 * 16);
  CHECK(facet_families().size() == 22);
  // "1 - x5 >= 0" and "1 + x5 >= 0".
  CHECK(table_facet("A") == Inequality({0, 0, 0, 0, 1}, 1));
  CHECK(table_facet("L") == Inequality({0, 0, 0, 0, -1}, 1));
  // 315/2 - 135/2 x5 >= 5x1 + x2 + 2x3 + x4, doubled.
  CHECK(table_facet("B++++") == Inequality({10, 2, 4, 2, 135}, 315));
  // 75 + 15 x5 >= 2x3 + x4 + x2 + x1.
  CHECK(table_facet("G'++++") == Inequality({1, 1, 2, 1, -15}, 75));
  // Signs follow the order in which the table lists the terms: the second
  // term of B' is x1.
  CHECK(table_facet("B'+-++") == Inequality({-2, 10, 2, 4, 135}, 315));
  std::set<Inequality> distinct;
  for (const auto& f : fs) distinct.insert(f.ineq);
  CHECK(distinct.size() == 322);
  CHECK(letter_of("H'+-++") == "H'");
  CHECK(letter_of("A") == "A");
}

TEST_CASE("the facets of the hull are exactly the table") {
  const Analysis& a = shared();
  REQUIRE(a.hull.facet_count() == 322);
  const auto fs = expected_facets();
  for (std::size_t f = 0; f < 322; ++f) CHECK(a.hull.facet(f) == fs[f].ineq);
  for (const auto& l : a.facet_labels) CHECK(l != "?");
}

TEST_CASE("prismatoid and width") {
  const Prismatoid q = santos_prismatoid();
  std::set<std::string> plus;
  for (auto v : q.plus_vertices()) plus.insert(q.polytope.label(v));
  CHECK(plus.size() == 24);
  for (const auto& l : plus) CHECK(l.back() == '+');
  CHECK(width(q) == 6);
  CHECK_FALSE(has_dstep_property(q));
  CHECK(q.asimpliciality() == 48 - 10);
}

TEST_CASE("width is invariant under symmetries and relabelling") {
  const auto [sigma, sigma_plus] = symmetry_groups();
  const VPolytope q = vertices();
  for (std::size_t k = 0; k < sigma.elements.size(); k += 9) {
    VPolytope img;
    for (std::size_t i = q.size(); i-- > 0;) img.vertices.push_back(apply_map(sigma.elements[k], q.vertices[i]));
    CHECK(width(make_prismatoid(img)) == 6);
  }
}

TEST_CASE("symmetry groups") {
  const auto [sigma, sigma_plus] = symmetry_groups();
  CHECK(sigma.order() == 64);
  CHECK(sigma_plus.order() == 32);
  for (const auto& g : sigma_plus.elements) CHECK(sigma.contains(g));
  const VPolytope q = vertices();
  const Analysis& a = shared();
  for (const auto& g : sigma.elements) {
    CHECK(vertex_permutation(g, q).has_value());
    CHECK(facet_permutation(g, a.hull).has_value());
  }
  const auto perm = vertex_permutation(base_swap(), q);
  REQUIRE(perm.has_value());
  for (int i = 1; i <= 24; ++i) {
    CHECK((*perm)[q.index_of(std::to_string(i) + "+")] == q.index_of(std::to_string(i) + "-"));
  }
  const OrthMap sq = base_swap() * base_swap();
  CHECK_FALSE(sq.is_identity());
  CHECK(sigma_plus.contains(sq));
  CHECK_FALSE(sigma_plus.contains(base_swap()));
  // The map read literally as the image vector is also a symmetry, but it
  // does not send i+ to i-.
  CHECK(sigma.contains(literal_swap()));
  CHECK((*vertex_permutation(literal_swap(), q))[q.index_of("1+")] != q.index_of("1-"));
}

TEST_CASE("facet orbits") {
  const auto [sigma, sigma_plus] = symmetry_groups();
  const Analysis& a = shared();
  const auto plus = facet_orbits(sigma_plus, a.hull);
  std::map<std::size_t, int> sizes;
  for (const auto& o : plus) ++sizes[o.size()];
  CHECK(sizes[32] == 10);
  CHECK(sizes[1] == 2);
  CHECK(plus.size() == 12);
  const auto all = facet_orbits(sigma, a.hull);
  CHECK(all.size() == 6);
  for (const auto& o : all) {
    std::set<char> letters;
    for (auto f : o) letters.insert(a.facet_labels[f][0]);
    REQUIRE(letters.size() == 2);
    // Orbits pair letters symmetrically around the middle of A..L.
    CHECK(*letters.begin() + *letters.rbegin() == 'A' + 'L');
  }
}

TEST_CASE("adjacencies between orbits") {
  const auto [sigma, sigma_plus] = symmetry_groups();
  const OrbitQuotient q = orbit_adjacency_graph(shared(), sigma_plus);
  CHECK(q.graph.size() == 12);
  CHECK(q.graph.edge_count() == 18);
  CHECK(q.distance_A_L == 6);
}

TEST_CASE("neighbors of the representative facets") {
  const Analysis& a = shared();
  const auto nbrs = [&](const std::string& l) {
    std::set<std::string> out;
    for (auto g : a.dual.neighbors(*a.facet_by_label(l))) out.insert(a.facet_labels[g]);
    return out;
  };
  CHECK(nbrs("B++++") == std::set<std::string>{"A", "B+-++", "B++-+", "B+++-", "C++++", "D++++"});
  CHECK(nbrs("C++++") == std::set<std::string>{"B++++", "C++-+", "C+++-", "C'++++", "E++++", "F++++"});
  // In the table's labelling the G..K neighbors carry the opposite prime
  // from the printed lists.
  CHECK(nbrs("D++++") == std::set<std::string>{"B++++", "D+-++", "D+++-", "E++++", "G'++++"});
  CHECK(nbrs("E++++") == std::set<std::string>{"C++++", "D++++", "E+++-", "F++++", "G'++++"});
  CHECK(nbrs("F++++") == std::set<std::string>{"C++++", "E++++", "F+-++", "H++++", "I++++"});
}

TEST_CASE("bidimensions of the representatives") {
  const Analysis& a = shared();
  const auto bd = [&](const char* l) { return bidimension(a, *a.facet_by_label(l)); };
  CHECK(bd("B++++") == std::pair{3, 0});
  CHECK(bd("C++++") == std::pair{2, 1});
  CHECK(bd("D++++") == std::pair{2, 1});
  CHECK(bd("E++++") == std::pair{1, 2});
  CHECK(bd("F++++") == std::pair{1, 2});
  CHECK(bd("K++++") == std::pair{0, 3});
  CHECK(bd("A") == std::pair{4, -1});
}

TEST_CASE("incidence table and the displayed identities") {
  const Report t = verify_incidence_table(vertices());
  CHECK(t.checks.size() == 15);
  CHECK(t.all_pass());
  const Analysis& a = shared();
  const std::map<std::string, std::size_t> sizes = {{"B++++", 7}, {"C++++", 6}, {"D++++", 5}, {"E++++", 5}, {"F++++", 5}};
  for (const auto& [l, n] : sizes) CHECK(a.hull.incidence.row(*a.facet_by_label(l)).count() == n);
  CHECK(verify_prism_structure(vertices()).all_pass());
}

TEST_CASE("full suite passes and detects corrupted coordinates") {
  const Report r = verify_santos(vertices());
  INFO(r.to_string());
  CHECK(r.all_pass());
  CHECK(r.checks.size() >= 50);

  for (const auto& [row, col] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {20, 3}, {40, 2}}) {
    VPolytope bad = vertices();
    bad.vertices[row][col] += 1;
    const Report m = verify_santos(bad);
    CHECK_FALSE(m.all_pass());
    std::size_t failed = 0;
    for (const auto& c : m.checks) failed += !c.pass;
    CHECK(failed >= 2);
  }

  // Wrong size and missing labels produce FAIL lines, not exceptions.
  VPolytope small = vertices();
  small.vertices.pop_back();
  small.labels.pop_back();
  CHECK_NOTHROW(verify_santos(small));
  CHECK_FALSE(verify_santos(small).all_pass());
  VPolytope unlabeled(vertices().vertices);
  CHECK_FALSE(verify_santos(unlabeled).all_pass());
}
