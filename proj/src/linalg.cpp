#include "hirsch/linalg.hpp"

#include "hirsch/geometry.hpp"

namespace hirsch::linalg {

Echelon row_reduce(Matrix m) {
  Echelon out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Scalar inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Scalar f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  // Forward elimination only; cheaper than a full reduction.
  if (m.empty()) return 0;
  Matrix a = m;
  const std::size_t cols = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    for (std::size_t r = row + 1; r < a.size(); ++r) {
      if (sgn(a[r][col]) == 0) continue;
      const Scalar f = a[r][col] / a[row][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
  }
  return row;
}

Matrix nullspace(const Matrix& m, std::size_t cols) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.reduced.size(); ++r) v[e.pivots[r]] = -e.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Row(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw GeometryError("inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw GeometryError("inverse: matrix is singular");
  Matrix inv(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.reduced[i][n + j];
  }
  return inv;
}

std::vector<Integer> primitive_integer(const Row& v) {
  const Integer l = common_denominator(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Scalar scaled = x * l;
    out.push_back(scaled.get_num());
  }
  const Integer g = gcd_of(out);
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace hirsch::linalg
