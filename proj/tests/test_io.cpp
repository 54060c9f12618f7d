#include <doctest.h>

#include <sstream>

#include "hirsch/io.hpp"
#include "hirsch/santos.hpp"
#include "hirsch/torus_plot.hpp"

using namespace hirsch;

TEST_CASE("POLY round trip keeps exact data and labels") {
  const VPolytope p({{Scalar(1, 3), Scalar(-2)}, {Scalar(0), Scalar(7, 5)}, {Scalar(-1), Scalar(0)}}, {"a", "b", "c"});
  std::stringstream s;
  write_poly(s, p);
  const VPolytope q = read_poly(s);
  CHECK(q.vertices == p.vertices);
  CHECK(q.labels == p.labels);

  std::stringstream t;
  write_poly(t, santos::vertices());
  const VPolytope r = read_poly(t);
  CHECK(r.vertices == santos::vertices().vertices);
  CHECK(r.labels == santos::vertices().labels);
}

TEST_CASE("HPOLY round trip with incidence") {
  const VPolytope sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const HullResult h = facet_enumeration(sq);
  std::stringstream s;
  write_hpoly(s, h);
  const HPolyFile f = read_hpoly(s);
  CHECK(f.hpoly.ambient_dim == 2);
  CHECK(f.hpoly.inequalities == h.hpoly.inequalities);
  REQUIRE(f.incidence.has_value());
  for (std::size_t i = 0; i < h.facet_count(); ++i) CHECK((*f.incidence)[i] == h.incidence.vertices_of(i));

  std::stringstream plain;
  write_hpoly(plain, h.hpoly);
  CHECK_FALSE(read_hpoly(plain).incidence.has_value());
}

TEST_CASE("comments and blank lines are skipped") {
  std::istringstream s("# a segment\nPOLY 1\n\ndim 1\nvertices 2\n0\n  5/2  \n");
  const VPolytope p = read_poly(s);
  REQUIRE(p.size() == 2);
  CHECK(p.vertices[1][0] == Scalar(5, 2));
}

TEST_CASE("malformed input is rejected") {
  const char* bad[] = {
      "",
      "POLY 2\ndim 1\nvertices 1\n0\n",
      "POLY 1\ndim 2\nvertices 1\n0\n",
      "POLY 1\ndim 1\nvertices 2\n0\n",
      "POLY 1\ndim 1\nvertices 1\n0.5\n",
      "POLY 1\ndim 1\nvertices 1\n0\nlabels\n",
      "POLY 1\ndim 1\nvertices 1\n0\nextra\n",
      "POLY 1\ndim x\nvertices 1\n0\n",
      "POLY 1\ndim 0\nvertices 0\n",
  };
  for (const char* text : bad) {
    std::istringstream s(text);
    CHECK_THROWS_AS(read_poly(s), ParseError);
  }
  std::istringstream h("HPOLY 1\ndim 2\ninequalities 1\n1 0\n");
  CHECK_THROWS_AS(read_hpoly(h), ParseError);
  std::istringstream hi("HPOLY 1\ndim 1\ninequalities 1\n1 1\nincidence\n-1\n");
  CHECK_THROWS_AS(read_hpoly(hi), ParseError);
  CHECK_THROWS_AS(read_poly_file("/nonexistent/file.poly"), ParseError);
}

TEST_CASE("torus SVG") {
  const TorusLayer layer{"demo", "black",
                         {"TORUS a 0.100000 0.100000", "TORUS b 6.200000 0.100000", "TORUS c 3.000000 3.000000",
                          "EDGE a b", "EDGE a c"}};
  const std::string svg = torus_svg({layer}, 200);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  // a-b wraps around the border and is drawn from both ends; a-c is direct.
  std::size_t lines = 0;
  for (auto pos = svg.find("<line"); pos != std::string::npos; pos = svg.find("<line", pos + 1)) ++lines;
  CHECK(lines == 3);
  CHECK(torus_svg({layer}, 200) == svg);
  CHECK_THROWS_AS(torus_svg({{"x", "black", {"EDGE a b"}}}, 200), ParseError);
  CHECK_THROWS_AS(torus_svg({{"x", "black", {"NOPE"}}}, 200), ParseError);
}
