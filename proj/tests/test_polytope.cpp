#include <doctest.h>

#include <random>

#include "hirsch/prismatoid.hpp"
#include "oracles.hpp"

using namespace hirsch;

namespace {

VPolytope cube(int d) {
  VPolytope p;
  for (unsigned m = 0; m < (1u << d); ++m) {
    Point x = Point::zero(d);
    for (int i = 0; i < d; ++i) x[i] = ((m >> i) & 1u) ? 1 : -1;
    p.vertices.push_back(x);
  }
  return p;
}

VPolytope cross(int d) {
  VPolytope p;
  for (int i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      Point x = Point::zero(d);
      x[i] = s;
      p.vertices.push_back(x);
    }
  }
  return p;
}

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("facets of standard polytopes") {
  const HullResult c = facet_enumeration(cube(3));
  CHECK(c.dim == 3);
  CHECK(c.facet_count() == 6);
  CHECK(std::is_sorted(c.hpoly.inequalities.begin(), c.hpoly.inequalities.end()));
  for (const auto& f : c.hpoly.inequalities) CHECK(f.is_canonical());
  CHECK(is_simple(c));
  CHECK_FALSE(is_simplicial(c));

  const HullResult x = facet_enumeration(cross(4));
  CHECK(x.facet_count() == 16);
  CHECK(is_simplicial(x));
  CHECK(dual_graph(x).edge_count() == 32);
  CHECK(vertex_graph(x).edge_count() == 24);

  const VPolytope simplex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const HullResult s = facet_enumeration(simplex);
  CHECK(s.facet_count() == 4);
  CHECK(is_simple(s));
  CHECK(is_simplicial(s));
}

TEST_CASE("lower-dimensional input is handled inside its affine hull") {
  const VPolytope tri({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const HullResult h = facet_enumeration(tri);
  CHECK(h.dim == 2);
  CHECK(h.facet_count() == 3);
  CHECK(h.hpoly.equalities.size() == 1);
  CHECK(graph_diameter(vertex_graph(h)) == 1);
}

TEST_CASE("vertex certification names the offending point") {
  VPolytope p = cube(2);
  p.vertices.push_back(Point{Scalar(0), Scalar(0)});
  try {
    certify_vertices(p);
    FAIL("expected NotAVertexError");
  } catch (const NotAVertexError& e) {
    CHECK(e.index() == 4);
  }
  CHECK(extreme_points(p).size() == 4);
}

TEST_CASE("graphs of the cube") {
  const HullResult h = facet_enumeration(cube(3));
  const VertexGraph g = vertex_graph(h);
  CHECK(g.edge_count() == 12);
  CHECK(graph_diameter(g) == 3);
  CHECK(dual_graph(h).edge_count() == 12);
  CHECK(graph_diameter(dual_graph(h)) == 2);
  const auto path = shortest_path(g, 0, 7);
  CHECK(path.size() == 4);
  CHECK(path.front() == 0);
  CHECK(path.back() == 7);

  Graph two(2);
  CHECK_FALSE(is_connected(two));
  CHECK_THROWS_AS(graph_diameter(two), DisconnectedGraphError);
  CHECK(bfs_distances(two, 0)[1] == -1);
  CHECK_THROWS(two.add_edge(1, 1));
}

TEST_CASE("faces maximizing a functional") {
  const VPolytope c = cube(3);
  CHECK(face_maximizing(c, Point{Scalar(1), Scalar(0), Scalar(0)}).dim == 2);
  CHECK(face_maximizing(c, Point{Scalar(1), Scalar(1), Scalar(0)}).dim == 1);
  const Face v = face_maximizing(c, Point{Scalar(1), Scalar(2), Scalar(3)});
  CHECK(v.dim == 0);
  REQUIRE(v.vertices.size() == 1);
  CHECK(c.vertices[v.vertices[0]] == Point{Scalar(1), Scalar(1), Scalar(1)});
}

TEST_CASE("hull agrees with the brute-force oracle on random inputs") {
  std::mt19937_64 rng(20240611);
  int instances = 0;
  for (int round = 0; round < 20; ++round) {
    for (std::size_t d = 2; d <= 4; ++d) {
      std::uniform_int_distribution<std::size_t> count(d + 1, 12);
      const auto pts = oracle::random_points(rng, d, count(rng));
      const VPolytope p(pts);
      const HullResult h = facet_enumeration(p);
      const auto expected = oracle::facets(pts);
      REQUIRE(h.facet_count() == expected.size());
      for (std::size_t f = 0; f < expected.size(); ++f) {
        CHECK(h.facet(f) == expected[f].ineq);
        CHECK(h.incidence.vertices_of(f) == expected[f].tight);
      }
      CHECK(extreme_point_indices(p, h) == oracle::vertices(pts, expected));
      ++instances;
    }
  }
  CHECK(instances >= 50);
}

TEST_CASE("vertex-graph diameter agrees with the oracle") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 10; ++round) {
    const auto pts = oracle::random_points(rng, 3, 9);
    const VPolytope p = extreme_points(VPolytope(pts));
    const auto fs = oracle::facets(p.vertices);
    CHECK(graph_diameter(vertex_graph(facet_enumeration(p))) == oracle::vertex_diameter(p.size(), fs));
  }
}

TEST_CASE("polar about an interior point is an involution") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int round = 0; round < 12; ++round) {
    const std::size_t d = 2 + round % 3;
    const VPolytope raw = extreme_points(VPolytope(oracle::random_points(rng, d, d + 4)));
    const VPolytope p = translated(raw, -centroid(raw.vertices));
    const VPolytope back = polar_about_origin(polar_about_origin(p));
    CHECK(sorted(back.vertices) == sorted(p.vertices));
    ++checked;
  }
  CHECK(checked >= 10);
  // Cube and cross-polytope are polar to each other.
  CHECK(polar_about_origin(cube(3)).size() == 6);
  CHECK(polar(cross(3)).size() == 8);
}

TEST_CASE("prismatoids and their width") {
  const Prismatoid c = make_prismatoid(cube(3), Inequality({0, 0, 1}, 1), Inequality({0, 0, -1}, 1));
  CHECK(width(c) == 2);
  CHECK(has_dstep_property(c));
  CHECK(c.asimpliciality() == 2);

  // Triangle times segment: the square sides touch both triangles.
  const VPolytope prism({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  const Prismatoid t = make_prismatoid(prism);
  CHECK(width(t) == 2);
  CHECK(t.asimpliciality() == 0);

  // The octahedron is an antiprism over a triangle; the simplex has no
  // parallel facets.
  CHECK(width(make_prismatoid(cross(3))) == 3);
  CHECK_THROWS_AS(make_prismatoid(VPolytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), NotAPrismatoidError);
  CHECK_THROWS_AS(make_prismatoid(cube(3), Inequality({0, 0, 1}, 1), Inequality({0, 1, 0}, 1)),
                  NotAPrismatoidError);
}

TEST_CASE("spindles") {
  const auto s = is_spindle(cross(3));
  REQUIRE(s.has_value());
  CHECK(s->length == 2);
  const auto c = is_spindle(cube(3));
  REQUIRE(c.has_value());
  CHECK(c->length == 3);
  const VPolytope pent({{0, 2}, {2, 1}, {1, -2}, {-1, -2}, {-2, 1}});
  CHECK_FALSE(is_spindle(pent).has_value());
}
