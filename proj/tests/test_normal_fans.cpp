#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "hirsch/normal_fan.hpp"
#include "hirsch/santos.hpp"
#include "oracles.hpp"

using namespace hirsch;

namespace {

Point pt(std::initializer_list<int> xs) {
  std::vector<Scalar> c;
  for (int x : xs) c.emplace_back(x);
  return Point(c);
}

// Random prismatoid with bases on x_d = 1 and x_d = -1.
Prismatoid random_prismatoid(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<std::size_t> count(d, d + 3);
  std::vector<Point> pts;
  for (int s : {1, -1}) {
    for (const auto& p : oracle::random_points(rng, d - 1, count(rng), 3)) pts.push_back(p.with(Scalar(s)));
  }
  const VPolytope p = extreme_points(VPolytope(pts));
  std::vector<Scalar> up(d, Scalar(0));
  up.back() = 1;
  std::vector<Scalar> down(d, Scalar(0));
  down.back() = -1;
  return make_prismatoid(p, Inequality(up, 1), Inequality(down, 1));
}

}  // namespace

TEST_CASE("normal cone of a square vertex") {
  const VPolytope sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const NormalCone c = normal_cone(sq, 2);
  CHECK(c.generators.size() == 2);
  CHECK(contains_strictly(c, pt({1, 1})));
  CHECK(contains(c, pt({1, 0})));
  CHECK_FALSE(contains_strictly(c, pt({1, 0})));
  CHECK_FALSE(contains(c, pt({1, -1})));
}

TEST_CASE("normal cone of 5- in the minus base") {
  const VPolytope minus = santos::base_polytope(santos::vertices(), false);
  const NormalCone c = normal_cone(minus, minus.index_of("5-"));
  // -p1 + 2 p2 <= 0 and so on: 2|p2| <= p1, 2|p3| <= p1, 2|p4| <= 5 p1.
  const std::set<Inequality> want = {
      Inequality({-1, 2, 0, 0}, 0).canonical(),  Inequality({-1, -2, 0, 0}, 0).canonical(),
      Inequality({-1, 0, 2, 0}, 0).canonical(),  Inequality({-1, 0, -2, 0}, 0).canonical(),
      Inequality({-5, 0, 0, 2}, 0).canonical(),  Inequality({-5, 0, 0, -2}, 0).canonical(),
  };
  CHECK(std::set<Inequality>(c.inequalities.begin(), c.inequalities.end()) == want);
  CHECK(contains_strictly(c, pt({5, 1, 2, 1})));
  CHECK_FALSE(contains(c, pt({1, 5, 2, 1})));
}

TEST_CASE("torus coordinates") {
  const TorusPoint a = torus_project(pt({1, 0, 1, 0}));
  CHECK(a.x == doctest::Approx(0));
  CHECK(a.y == doctest::Approx(0));
  const TorusPoint b = torus_project(pt({0, 1, 0, 1}));
  CHECK(b.x == doctest::Approx(M_PI / 2));
  CHECK(b.y == doctest::Approx(M_PI / 2));
  const TorusPoint c = torus_project(pt({5, 1, 2, 1}));
  CHECK(c.x == doctest::Approx(std::atan(0.2)));
  CHECK(c.y == doctest::Approx(std::atan(0.5)));
  const TorusPoint d = torus_project(pt({0, -1, 1, 0}));
  CHECK(d.x == doctest::Approx(3 * M_PI / 2));
  CHECK_THROWS_AS(torus_project(pt({0, 0, 1, 1})), GeometryError);
}

TEST_CASE("normals of the two bases") {
  const auto plus = gplus_vertices();
  CHECK(plus.size() == 32);
  std::set<Point> expected;
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) {
          expected.insert(pt({5 * s0, 1 * s1, 2 * s2, 1 * s3}));
          expected.insert(pt({1 * s0, 5 * s1, 1 * s2, 2 * s3}));
        }
  CHECK(std::set<Point>(plus.begin(), plus.end()) == expected);
  CHECK(torus_membership_check().all_pass());

  const auto minus = gminus_vertices();
  CHECK(minus.size() == 32);
  for (const auto& n : minus) {
    CHECK(n[0] * n[0] + n[1] * n[1] == 5);
    CHECK(n[2] * n[2] + n[3] * n[3] == 26);
  }
  const auto lines = torus_plot_data(santos::base_polytope(santos::vertices(), true), "+");
  std::size_t torus = 0, edges = 0;
  for (const auto& l : lines) (l.rfind("TORUS", 0) == 0 ? torus : edges)++;
  // Each vertex of the plus base has 6 edges (24 * 6 / 2 = 72 in all), so
  // Euler's relation f0 - f1 + f2 - f3 = 0 leaves 24 - 72 + f2 - 32 = 0 ridges.
  CHECK(torus == 32);
  CHECK(edges == 80);
}

TEST_CASE("Minkowski sum of two segments") {
  const VPolytope a({{0, 0}, {1, 0}});
  const VPolytope b({{0, 0}, {0, 1}});
  const MinkowskiSum m = minkowski_sum(a, b);
  CHECK(m.sum.size() == 4);
  REQUIRE(m.hull.facet_count() == 4);
  std::multiset<std::pair<int, int>> bd;
  for (const auto& f : m.facets) bd.insert(f.bidimension());
  CHECK(bd == std::multiset<std::pair<int, int>>{{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  CHECK(decomposition_is_exact(m, a, b));
}

TEST_CASE("Minkowski sum of the two bases") {
  const Prismatoid q = santos::santos_prismatoid();
  const ProjectedBases b = projected_bases(q);
  const MinkowskiSum m = minkowski_sum(b.plus, b.minus);
  CHECK(m.hull.facet_count() == 320);
  CHECK(m.sum.size() == 208);
  CHECK(decomposition_is_exact(m, b.plus, b.minus));
  CHECK(sum_dual_graph_check(q, m, b).all_pass());
  const PairDStep pd = pair_dstep_property(m, 4, 4, 5);
  CHECK_FALSE(pd.property);
  CHECK(pd.min_facets == 5);
  CHECK(transversality_check(q).all_pass());
}

TEST_CASE("intermediate slices") {
  VPolytope cube;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) cube.vertices.push_back(pt({x, y, z}));
  const Prismatoid c = make_prismatoid(cube, Inequality({0, 0, 1}, 1), Inequality({0, 0, -1}, 1));
  const VPolytope mid = intermediate_slice(c, Scalar(1, 2));
  CHECK(mid.vertices == std::vector<Point>{pt({-1, -1, 0}), pt({-1, 1, 0}), pt({1, -1, 0}), pt({1, 1, 0})});
  CHECK(weighted_base_sum(c, Scalar(1, 2)).vertices == mid.vertices);
  CHECK_THROWS_AS(intermediate_slice(c, Scalar(1)), GeometryError);

  // The slice of a prism over a triangle with a rotated copy: lambda weights
  // the plus base.
  const VPolytope t({{0, 0, 1}, {4, 0, 1}, {0, 4, 1}, {0, 0, -1}, {-4, 0, -1}, {0, -4, -1}});
  const Prismatoid tq = make_prismatoid(t, Inequality({0, 0, 1}, 1), Inequality({0, 0, -1}, 1));
  const VPolytope s = intermediate_slice(tq, Scalar(3, 4));
  CHECK(s.vertices == weighted_base_sum(tq, Scalar(3, 4)).vertices);
  for (const auto& v : s.vertices) CHECK(v[2] == Scalar(1, 2));

  const Prismatoid q = santos::santos_prismatoid();
  const HullResult h2 = facet_enumeration(intermediate_slice(q, Scalar(1, 2)));
  const HullResult h3 = facet_enumeration(intermediate_slice(q, Scalar(1, 3)));
  CHECK(h2.facet_count() == 320);
  CHECK(h3.facet_count() == 320);
  CHECK(dual_graph(h2).edge_count() == dual_graph(h3).edge_count());
}

TEST_CASE("width bound and the pair property agree on random prismatoids") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int round = 0; round < 12; ++round) {
    const std::size_t d = 3 + round % 2;
    const Prismatoid q = random_prismatoid(rng, d);
    const ProjectedBases b = projected_bases(q);
    const PairDStep pd = pair_dstep_property(b.plus, b.minus, static_cast<int>(d));
    const int w = width(q);
    CHECK(pd.min_facets + 1 == w);
    CHECK(pd.property == (w <= static_cast<int>(d)));
    CHECK(pd.property);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("position of the two normal maps") {
  const Report r = normal_map_position_check(santos::vertices());
  INFO(r.to_string());
  CHECK(r.all_pass());
  CHECK(r.checks.size() >= 5);
}

TEST_CASE("vertex figures of the bases are cubes") {
  const VPolytope q = santos::vertices();
  CHECK(cube_vertex_figure_check(santos::base_polytope(q, true)).all_pass());
  CHECK(cube_vertex_figure_check(santos::base_polytope(q, false)).all_pass());
  const VPolytope simplex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(cube_vertex_figure_check(simplex).all_pass());
}
