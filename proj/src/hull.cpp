// Facet enumeration by the double description method.
//
// Points p_i are homogenized to integer vectors w_i ~ (1, p_i). The facets of
// conv(p) are the extreme rays of the dual cone {a : a.w_i >= 0 for all i},
// which we build by adding the constraints w_i one at a time in input order.
// Adjacency of rays is decided combinatorially from their zero sets.

#include <algorithm>
#include <numeric>

#include "hirsch/linalg.hpp"
#include "hirsch/polytope.hpp"

namespace hirsch {

namespace {

using IntVec = std::vector<Integer>;

struct Ray {
  IntVec a;
  Bitset zeros;
};

Integer int_dot(const IntVec& a, const IntVec& b) {
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(IntVec& v) {
  const Integer g = gcd_of(v);
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

IntVec homogenize(const Point& p, const std::vector<std::size_t>& coords) {
  linalg::Row row;
  row.reserve(coords.size() + 1);
  row.emplace_back(1);
  for (auto c : coords) row.push_back(p[c]);
  const Integer l = common_denominator(row);
  IntVec out;
  out.reserve(row.size());
  for (const auto& x : row) {
    Scalar s = x * l;
    out.push_back(s.get_num());
  }
  return out;
}

/// Greedy choice, in input order, of gens.size() >= D linearly independent rows.
std::vector<std::size_t> initial_basis(const std::vector<IntVec>& gens, std::size_t D) {
  std::vector<std::size_t> chosen;
  linalg::Matrix echelon;  // rows kept in reduced form with recorded pivots
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < gens.size() && chosen.size() < D; ++i) {
    linalg::Row r(gens[i].begin(), gens[i].end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::size_t pc = pivots[k];
      if (sgn(r[pc]) == 0) continue;
      const Scalar f = r[pc] / echelon[k][pc];
      for (std::size_t c = 0; c < D; ++c) r[c] -= f * echelon[k][c];
    }
    const auto it = std::find_if(r.begin(), r.end(), [](const Scalar& x) { return sgn(x) != 0; });
    if (it == r.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - r.begin()));
    echelon.push_back(std::move(r));
    chosen.push_back(i);
  }
  if (chosen.size() < D) throw GeometryError("facet_enumeration: internal rank deficiency");
  return chosen;
}

std::vector<Ray> double_description(const std::vector<IntVec>& gens, std::size_t D) {
  const std::size_t n = gens.size();
  const std::vector<std::size_t> basis = initial_basis(gens, D);

  // Rays of the initial simplicial cone are the columns of W_B^{-1}.
  linalg::Matrix wb;
  for (auto b : basis) wb.emplace_back(gens[b].begin(), gens[b].end());
  const linalg::Matrix inv = linalg::inverse(wb);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < D; ++j) {
    linalg::Row col(D);
    for (std::size_t i = 0; i < D; ++i) col[i] = inv[i][j];
    Ray r{linalg::primitive_integer(col), Bitset(n)};
    for (std::size_t i = 0; i < D; ++i) {
      if (i != j) r.zeros.set(basis[i]);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(n, false);
  for (auto b : basis) in_basis[b] = true;

  for (std::size_t t = 0; t < n; ++t) {
    if (in_basis[t]) continue;
    const IntVec& w = gens[t];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = int_dot(rays[r].a, w);
      const int s = sgn(val[r]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(r);
    }
    if (neg.empty()) {
      for (auto r : zer) rays[r].zeros.set(t);
      continue;
    }

    std::vector<Ray> next;
    next.reserve(pos.size() + zer.size());
    for (auto r : pos) next.push_back(rays[r]);
    for (auto r : zer) {
      next.push_back(rays[r]);
      next.back().zeros.set(t);
    }

    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].zeros & rays[q].zeros;
        const std::size_t cnt = common.count();
        if (cnt + 2 < D) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size(); ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IntVec a(D);
        for (std::size_t i = 0; i < D; ++i) a[i] = val[p] * rays[q].a[i] - val[q] * rays[p].a[i];
        make_primitive(a);
        common.set(t);
        next.push_back(Ray{std::move(a), std::move(common)});
      }
    }
    rays = std::move(next);
  }
  return rays;
}

void reject_duplicates(const std::vector<Point>& pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (pts[order[i]] == pts[order[i - 1]]) {
      throw GeometryError("facet_enumeration: duplicate points " + std::to_string(std::min(order[i - 1], order[i])) +
                          " and " + std::to_string(std::max(order[i - 1], order[i])));
    }
  }
}

}  // namespace

HullResult facet_enumeration(const VPolytope& p) {
  const std::size_t d = common_dim(p.vertices);
  reject_duplicates(p.vertices);

  linalg::Matrix diffs;
  for (std::size_t i = 1; i < p.size(); ++i) diffs.push_back((p.vertices[i] - p.vertices[0]).coords());
  const linalg::Echelon ech = linalg::row_reduce(diffs);
  const std::size_t k = ech.pivots.size();
  if (k < 1) throw GeometryError("facet_enumeration: degenerate input (affine rank < 1)");

  HullResult out;
  out.dim = static_cast<int>(k);
  out.hpoly.ambient_dim = d;

  // The pivot coordinates parametrize the affine hull injectively.
  std::vector<std::size_t> coords = ech.pivots;
  if (k < d) {
    for (const auto& nv : linalg::nullspace(diffs, d)) {
      const Point normal(nv);
      out.hpoly.equalities.push_back(
          Inequality(normal.coords(), dot(normal, p.vertices[0])).canonical_hyperplane());
    }
    std::sort(out.hpoly.equalities.begin(), out.hpoly.equalities.end());
  }

  std::vector<IntVec> gens;
  gens.reserve(p.size());
  for (const auto& v : p.vertices) gens.push_back(homogenize(v, coords));

  std::vector<Ray> rays = double_description(gens, k + 1);

  std::vector<std::pair<Inequality, Bitset>> facets;
  facets.reserve(rays.size());
  for (auto& r : rays) {
    // a0 + a'.x >= 0  <=>  -a'.x <= a0
    std::vector<Scalar> coeffs(d, Scalar(0));
    for (std::size_t i = 0; i < k; ++i) coeffs[coords[i]] = Scalar(-r.a[i + 1]);
    facets.emplace_back(Inequality(std::move(coeffs), Scalar(r.a[0])).canonical(), std::move(r.zeros));
  }
  std::sort(facets.begin(), facets.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<Bitset> rows;
  rows.reserve(facets.size());
  for (auto& [ineq, zeros] : facets) {
    out.hpoly.inequalities.push_back(ineq);
    rows.push_back(std::move(zeros));
  }
  out.incidence = FacetIncidence(std::move(rows), p.size());
  return out;
}

}  // namespace hirsch
