#pragma once

// Brute-force references for small inputs, written without the hull engine:
// every d-subset of points spans a candidate hyperplane (normal from
// cofactors), kept when all points lie on one side of it.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hirsch/polytope.hpp"

namespace oracle {

using hirsch::Inequality;
using hirsch::Point;
using hirsch::Scalar;

inline Scalar det(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Scalar(1);
  Scalar result(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      result = -result;
    }
    result *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Scalar f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return result;
}

struct Facet {
  Inequality ineq;
  std::vector<std::size_t> tight;
};

/// Facets of conv(pts) for full-dimensional input, sorted by inequality.
inline std::vector<Facet> facets(const std::vector<Point>& pts) {
  const std::size_t d = pts.front().dim();
  const std::size_t n = pts.size();
  std::set<Inequality> seen;
  std::vector<Facet> out;
  std::vector<std::size_t> pick(d);
  // Walk all d-subsets in lexicographic order.
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Scalar>> diff;
    for (std::size_t i = 1; i < d; ++i) {
      std::vector<Scalar> row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = pts[pick[i]][k] - pts[pick[0]][k];
      diff.push_back(row);
    }
    std::vector<Scalar> normal(d);
    bool nonzero = false;
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<std::vector<Scalar>> minor;
      for (const auto& row : diff) {
        std::vector<Scalar> r;
        for (std::size_t c = 0; c < d; ++c) {
          if (c != k) r.push_back(row[c]);
        }
        minor.push_back(r);
      }
      normal[k] = ((k % 2) ? Scalar(-1) : Scalar(1)) * det(minor);
      if (normal[k] != 0) nonzero = true;
    }
    if (nonzero) {
      const Scalar b = hirsch::dot(Point(normal), pts[pick[0]]);
      int above = 0, below = 0;
      std::vector<std::size_t> tight;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar v = hirsch::dot(Point(normal), pts[j]);
        if (v > b) ++above;
        if (v < b) ++below;
        if (v == b) tight.push_back(j);
      }
      if (above == 0 || below == 0) {
        std::vector<Scalar> a = normal;
        Scalar off = b;
        if (above > 0) {
          for (auto& x : a) x = -x;
          off = -off;
        }
        const Inequality ineq = Inequality(a, off).canonical();
        if (seen.insert(ineq).second) out.push_back({ineq, tight});
      }
    }
    // next subset
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < d; ++k) pick[k] = pick[k - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const Facet& x, const Facet& y) { return x.ineq < y.ineq; });
  return out;
}

/// A point is a vertex when the facets through it meet in that point alone.
inline std::vector<std::size_t> vertices(const std::vector<Point>& pts, const std::vector<Facet>& fs) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    std::set<std::size_t> common;
    bool first = true;
    for (const auto& f : fs) {
      if (!std::binary_search(f.tight.begin(), f.tight.end(), v)) continue;
      std::set<std::size_t> t(f.tight.begin(), f.tight.end());
      if (first) {
        common = t;
        first = false;
      } else {
        std::set<std::size_t> keep;
        std::set_intersection(common.begin(), common.end(), t.begin(), t.end(), std::inserter(keep, keep.end()));
        common = keep;
      }
    }
    if (!first && common.size() == 1) out.push_back(v);
  }
  return out;
}

/// All-pairs distances (Floyd-Warshall) of the vertex graph, edges read off
/// the facet lists: v, w adjacent when the facets through both meet in {v, w}.
inline int vertex_diameter(std::size_t n, const std::vector<Facet>& fs) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) {
    dist[v][v] = 0;
    for (std::size_t w = v + 1; w < n; ++w) {
      std::vector<std::size_t> common;
      bool first = true;
      for (const auto& f : fs) {
        const bool hv = std::binary_search(f.tight.begin(), f.tight.end(), v);
        const bool hw = std::binary_search(f.tight.begin(), f.tight.end(), w);
        if (!hv || !hw) continue;
        if (first) {
          common = f.tight;
          first = false;
        } else {
          std::vector<std::size_t> keep;
          std::set_intersection(common.begin(), common.end(), f.tight.begin(), f.tight.end(),
                                std::back_inserter(keep));
          common = keep;
        }
      }
      if (!first && common.size() == 2) dist[v][w] = dist[w][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  int diam = 0;
  for (const auto& row : dist)
    for (int x : row) diam = std::max(diam, x);
  return diam;
}

/// Random full-dimensional point set with distinct integer coordinates in
/// [-range, range].
inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t d, std::size_t n, int range = 5) {
  std::uniform_int_distribution<int> coord(-range, range);
  while (true) {
    std::set<Point> pts;
    while (pts.size() < n) {
      Point p = Point::zero(d);
      for (std::size_t i = 0; i < d; ++i) p[i] = coord(rng);
      pts.insert(p);
    }
    std::vector<Point> out(pts.begin(), pts.end());
    if (hirsch::affine_rank(out) == static_cast<int>(d)) return out;
  }
}

}  // namespace oracle
