// Coordinates and facet rows of the 48-vertex prismatoid.

#include <array>

#include "hirsch/santos.hpp"

namespace hirsch::santos {

namespace {

// x1..x4 of 1+ .. 24+; every plus vertex has x5 = 1.
constexpr std::array<std::array<int, 4>, 24> kPlus = {{
    {18, 0, 0, 0},   {-18, 0, 0, 0},  {0, 18, 0, 0},   {0, -18, 0, 0},
    {0, 0, 45, 0},   {0, 0, -45, 0},  {0, 0, 0, 45},   {0, 0, 0, -45},
    {15, 15, 0, 0},  {-15, 15, 0, 0}, {15, -15, 0, 0}, {-15, -15, 0, 0},
    {0, 0, 30, 30},  {0, 0, -30, 30}, {0, 0, 30, -30}, {0, 0, -30, -30},
    {0, 10, 40, 0},  {0, -10, 40, 0}, {0, 10, -40, 0}, {0, -10, -40, 0},
    {10, 0, 0, 40},  {-10, 0, 0, 40}, {10, 0, 0, -40}, {-10, 0, 0, -40},
}};

// x1..x4 of 1- .. 24-; every minus vertex has x5 = -1.
constexpr std::array<std::array<int, 4>, 24> kMinus = {{
    {0, 0, 0, 18},   {0, 0, 0, -18},  {0, 0, 18, 0},   {0, 0, -18, 0},
    {45, 0, 0, 0},   {-45, 0, 0, 0},  {0, 45, 0, 0},   {0, -45, 0, 0},
    {0, 0, 15, 15},  {0, 0, 15, -15}, {0, 0, -15, 15}, {0, 0, -15, -15},
    {30, 30, 0, 0},  {-30, 30, 0, 0}, {30, -30, 0, 0}, {-30, -30, 0, 0},
    {40, 0, 10, 0},  {40, 0, -10, 0}, {-40, 0, 10, 0}, {-40, 0, -10, 0},
    {0, 40, 0, 10},  {0, 40, 0, -10}, {0, -40, 0, 10}, {0, -40, 0, -10},
}};

Scalar q(long num, long den = 1) {
  Scalar x(num, den);
  x.canonicalize();
  return x;
}

}  // namespace

VPolytope vertices() {
  VPolytope p;
  for (int side = 0; side < 2; ++side) {
    const auto& rows = side == 0 ? kPlus : kMinus;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      p.vertices.push_back(Point{q(r[0]), q(r[1]), q(r[2]), q(r[3]), q(side == 0 ? 1 : -1)});
      p.labels.push_back(std::to_string(i + 1) + (side == 0 ? "+" : "-"));
    }
  }
  return p;
}

const std::vector<FacetFamily>& facet_families() {
  // Variables are 0-based: x1 -> 0, ..., x4 -> 3.
  static const std::vector<FacetFamily> rows = {
      {"A", q(1), q(-1), {}},
      {"B", q(315, 2), q(-135, 2), {{q(5), 0}, {q(1), 1}, {q(2), 2}, {q(1), 3}}},
      {"B'", q(315, 2), q(-135, 2), {{q(5), 1}, {q(1), 0}, {q(2), 3}, {q(1), 2}}},
      {"C", q(135), q(-45), {{q(4), 0}, {q(2), 1}, {q(7, 4), 2}, {q(5, 4), 3}}},
      {"C'", q(135), q(-45), {{q(4), 1}, {q(2), 0}, {q(7, 4), 3}, {q(5, 4), 2}}},
      {"D", q(135), q(-45), {{q(4), 0}, {q(1), 1}, {q(2), 2}, {q(1), 3}}},
      {"D'", q(135), q(-45), {{q(4), 1}, {q(1), 0}, {q(2), 3}, {q(1), 2}}},
      {"E", q(105), q(-30), {{q(3), 0}, {q(3, 2), 1}, {q(3, 2), 2}, {q(1), 3}}},
      {"E'", q(105), q(-30), {{q(3), 1}, {q(3, 2), 0}, {q(3, 2), 3}, {q(1), 2}}},
      {"F", q(75), q(-15), {{q(2), 0}, {q(1), 1}, {q(1), 2}, {q(1), 3}}},
      {"F'", q(75), q(-15), {{q(2), 1}, {q(1), 0}, {q(1), 3}, {q(1), 2}}},
      {"G", q(75), q(15), {{q(2), 3}, {q(1), 2}, {q(1), 0}, {q(1), 1}}},
      {"G'", q(75), q(15), {{q(2), 2}, {q(1), 3}, {q(1), 1}, {q(1), 0}}},
      {"H", q(105), q(30), {{q(3), 3}, {q(3, 2), 2}, {q(3, 2), 0}, {q(1), 1}}},
      {"H'", q(105), q(30), {{q(3), 2}, {q(3, 2), 3}, {q(3, 2), 1}, {q(1), 0}}},
      {"I", q(135), q(45), {{q(4), 3}, {q(1), 2}, {q(2), 0}, {q(1), 1}}},
      {"I'", q(135), q(45), {{q(4), 2}, {q(1), 3}, {q(2), 1}, {q(1), 0}}},
      {"J", q(135), q(45), {{q(4), 3}, {q(2), 2}, {q(7, 4), 0}, {q(5, 4), 1}}},
      {"J'", q(135), q(45), {{q(4), 2}, {q(2), 3}, {q(7, 4), 1}, {q(5, 4), 0}}},
      {"K", q(315, 2), q(135, 2), {{q(5), 3}, {q(1), 2}, {q(2), 0}, {q(1), 1}}},
      {"K'", q(315, 2), q(135, 2), {{q(5), 2}, {q(1), 3}, {q(2), 1}, {q(1), 0}}},
      {"L", q(1), q(1), {}},
  };
  return rows;
}

}  // namespace hirsch::santos
