#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hirsch/rational.hpp"

namespace hirsch {

/// Raised for malformed geometric input (dimension mismatches, degenerate
/// point sets, non-orthogonal maps and the like).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Scalar> coords);
  Point(std::initializer_list<Scalar> coords);
  static Point zero(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(const Scalar& factor);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Scalar& s, Point a) { return a *= s; }
  friend Point operator-(Point a) { return a *= Scalar(-1); }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

  /// Drops coordinate `index`.
  Point without(std::size_t index) const;
  /// Appends one coordinate.
  Point with(const Scalar& last) const;

  std::string to_string() const;

 private:
  std::vector<Scalar> coords_;
};

Scalar dot(const Point& a, const Point& b);
Point centroid(std::span<const Point> points);

struct Evaluation {
  int sign;      ///< sign of offset - coeffs.p
  Scalar slack;  ///< offset - coeffs.p, exactly
};

/// coeffs . x <= offset. The coefficient vector is never zero.
class Inequality {
 public:
  Inequality(std::vector<Scalar> coeffs, Scalar offset);

  std::size_t dim() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& offset() const { return offset_; }
  Point normal() const { return Point(coeffs_); }

  /// Positive rescaling to coprime integers; direction is preserved.
  Inequality canonical() const;
  /// Like canonical(), but also flips the sign so the first nonzero
  /// coefficient is positive. Used when only the hyperplane matters.
  Inequality canonical_hyperplane() const;
  bool is_canonical() const;

  Inequality negated() const;
  std::string to_string() const;

  friend bool operator==(const Inequality& a, const Inequality& b) {
    return a.coeffs_ == b.coeffs_ && a.offset_ == b.offset_;
  }
  /// Lexicographic on (coeffs, offset).
  friend bool operator<(const Inequality& a, const Inequality& b);

 private:
  std::vector<Scalar> coeffs_;
  Scalar offset_;
};

Evaluation evaluate(const Inequality& ineq, const Point& p);

/// Signed permutation matrix (orthogonal with entries in {-1, 0, 1}).
class OrthMap {
 public:
  explicit OrthMap(std::vector<std::vector<int>> rows);
  static OrthMap identity(std::size_t dim);
  /// The map sending e_i to sign[i] * e_{target[i]}.
  static OrthMap signed_permutation(const std::vector<std::size_t>& target, const std::vector<int>& signs);

  std::size_t dim() const { return rows_.size(); }
  int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  OrthMap transpose() const;
  bool is_identity() const;

  /// (this * other): apply `other` first, then this.
  OrthMap operator*(const OrthMap& other) const;

  friend bool operator==(const OrthMap& a, const OrthMap& b) { return a.rows_ == b.rows_; }
  friend bool operator<(const OrthMap& a, const OrthMap& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

Point apply_map(const OrthMap& m, const Point& p);
/// Image of {x : a.x <= b} under x -> Mx, in canonical form.
Inequality apply_map_ineq(const OrthMap& m, const Inequality& ineq);

/// Dimension of the affine hull. Throws on an empty list or mixed dimensions.
int affine_rank(std::span<const Point> points);

/// Hyperplane containing all points, which must have affine rank
/// ambient_dim - 1. Returned in canonical_hyperplane() form.
Inequality hyperplane_through(std::span<const Point> points);

/// Shared ambient dimension, or GeometryError.
std::size_t common_dim(std::span<const Point> points);

}  // namespace hirsch
