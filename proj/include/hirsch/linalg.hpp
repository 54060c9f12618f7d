#pragma once

// Dense exact linear algebra over the rationals. Elimination always takes
// the first nonzero entry of a column as pivot so intermediate results are
// reproducible.

#include <cstddef>
#include <vector>

#include "hirsch/rational.hpp"

namespace hirsch::linalg {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

struct Echelon {
  Matrix reduced;                     ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;    ///< pivot column of each row of `reduced`
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
Matrix nullspace(const Matrix& m, std::size_t cols);

/// Inverse of a square nonsingular matrix; throws GeometryError if singular.
Matrix inverse(const Matrix& m);

/// Scales a rational vector by a positive factor to coprime integers.
std::vector<Integer> primitive_integer(const Row& v);

}  // namespace hirsch::linalg
