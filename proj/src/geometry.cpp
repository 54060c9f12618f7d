#include "hirsch/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "hirsch/linalg.hpp"

namespace hirsch {

// ---------------------------------------------------------------- Point

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
Point::Point(std::initializer_list<Scalar> coords) : coords_(coords) {}

Point Point::zero(std::size_t dim) { return Point(std::vector<Scalar>(dim, Scalar(0))); }

Point& Point::operator+=(const Point& other) {
  if (other.dim() != dim()) throw GeometryError("point dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  if (other.dim() != dim()) throw GeometryError("point dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(const Scalar& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

Point Point::without(std::size_t index) const {
  std::vector<Scalar> c = coords_;
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(index));
  return Point(std::move(c));
}

Point Point::with(const Scalar& last) const {
  std::vector<Scalar> c = coords_;
  c.push_back(last);
  return Point(std::move(c));
}

std::string Point::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += hirsch::to_string(coords_[i]);
  }
  return s + ")";
}

Scalar dot(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw GeometryError("dot: dimension mismatch");
  Scalar s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Point centroid(std::span<const Point> points) {
  const std::size_t d = common_dim(points);
  Point c = Point::zero(d);
  for (const auto& p : points) c += p;
  c *= Scalar(1) / Scalar(static_cast<unsigned long>(points.size()));
  return c;
}

std::size_t common_dim(std::span<const Point> points) {
  if (points.empty()) throw GeometryError("empty point list");
  const std::size_t d = points.front().dim();
  if (d == 0) throw GeometryError("points must have ambient dimension >= 1");
  for (const auto& p : points) {
    if (p.dim() != d) throw GeometryError("points have mismatched ambient dimensions");
  }
  return d;
}

// ----------------------------------------------------------- Inequality

Inequality::Inequality(std::vector<Scalar> coeffs, Scalar offset)
    : coeffs_(std::move(coeffs)), offset_(std::move(offset)) {
  if (coeffs_.empty() || std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return sgn(c) == 0; })) {
    throw GeometryError("inequality with an all-zero coefficient vector");
  }
}

Inequality Inequality::canonical() const {
  linalg::Row all = coeffs_;
  all.push_back(offset_);
  const auto ints = linalg::primitive_integer(all);
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c.emplace_back(ints[i]);
  return Inequality(std::move(c), Scalar(ints.back()));
}

Inequality Inequality::canonical_hyperplane() const {
  Inequality c = canonical();
  const auto first = std::find_if(c.coeffs_.begin(), c.coeffs_.end(), [](const Scalar& x) { return sgn(x) != 0; });
  if (sgn(*first) < 0) return c.negated();
  return c;
}

bool Inequality::is_canonical() const { return canonical() == *this; }

Inequality Inequality::negated() const {
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x = -x;
  return Inequality(std::move(c), -offset_);
}

std::string Inequality::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << hirsch::to_string(coeffs_[i]);
  }
  os << " | " << hirsch::to_string(offset_) << ")";
  return os.str();
}

bool operator<(const Inequality& a, const Inequality& b) {
  if (a.coeffs_ != b.coeffs_) return a.coeffs_ < b.coeffs_;
  return a.offset_ < b.offset_;
}

Evaluation evaluate(const Inequality& ineq, const Point& p) {
  if (ineq.dim() != p.dim()) throw GeometryError("evaluate: dimension mismatch");
  Scalar slack = ineq.offset() - dot(ineq.normal(), p);
  const int s = sgn(slack);
  return {s, std::move(slack)};
}

// --------------------------------------------------------------- OrthMap

OrthMap::OrthMap(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0) throw GeometryError("OrthMap: empty matrix");
  for (const auto& r : rows_) {
    if (r.size() != n) throw GeometryError("OrthMap: matrix is not square");
    for (int x : r) {
      if (x < -1 || x > 1) throw GeometryError("OrthMap: entries must be in {-1,0,1}");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < n; ++k) s += rows_[i][k] * rows_[j][k];
      if (s != (i == j ? 1 : 0)) throw GeometryError("OrthMap: matrix is not orthogonal");
    }
  }
}

OrthMap OrthMap::identity(std::size_t dim) {
  std::vector<std::vector<int>> rows(dim, std::vector<int>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1;
  return OrthMap(std::move(rows));
}

OrthMap OrthMap::signed_permutation(const std::vector<std::size_t>& target, const std::vector<int>& signs) {
  const std::size_t n = target.size();
  if (signs.size() != n) throw GeometryError("OrthMap: sign list length mismatch");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (target[i] >= n) throw GeometryError("OrthMap: target index out of range");
    rows[target[i]][i] = signs[i];
  }
  return OrthMap(std::move(rows));
}

OrthMap OrthMap::transpose() const {
  const std::size_t n = dim();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j][i] = rows_[i][j];
  }
  return OrthMap(std::move(t));
}

bool OrthMap::is_identity() const { return *this == identity(dim()); }

OrthMap OrthMap::operator*(const OrthMap& other) const {
  const std::size_t n = dim();
  if (other.dim() != n) throw GeometryError("OrthMap: dimension mismatch in product");
  std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < n; ++k) s += rows_[i][k] * other.rows_[k][j];
      p[i][j] = s;
    }
  }
  return OrthMap(std::move(p));
}

Point apply_map(const OrthMap& m, const Point& p) {
  if (m.dim() != p.dim()) throw GeometryError("apply_map: dimension mismatch");
  std::vector<Scalar> out(p.dim(), Scalar(0));
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      const int e = m.at(i, j);
      if (e == 1) out[i] += p[j];
      else if (e == -1) out[i] -= p[j];
    }
  }
  return Point(std::move(out));
}

Inequality apply_map_ineq(const OrthMap& m, const Inequality& ineq) {
  // a.x <= b with y = Mx becomes (M a).y <= b since M^{-1} = M^T.
  const Point image = apply_map(m, ineq.normal());
  return Inequality(image.coords(), ineq.offset()).canonical();
}

// ------------------------------------------------------- affine helpers

int affine_rank(std::span<const Point> points) {
  common_dim(points);
  linalg::Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back((points[i] - points[0]).coords());
  return static_cast<int>(linalg::rank(diffs));
}

Inequality hyperplane_through(std::span<const Point> points) {
  const std::size_t d = common_dim(points);
  linalg::Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back((points[i] - points[0]).coords());
  const auto null = linalg::nullspace(diffs, d);
  if (null.size() != 1) {
    throw GeometryError("hyperplane_through: points have affine rank " + std::to_string(d - null.size()) +
                        ", expected " + std::to_string(d - 1));
  }
  const Point normal(null.front());
  return Inequality(normal.coords(), dot(normal, points[0])).canonical_hyperplane();
}

}  // namespace hirsch
