#pragma once

// Exact rational scalars. Everything geometric in this library is built on
// GMP rationals; there is no floating point outside the plotting code.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hirsch {

using Scalar = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "[+-]digits[/digits]" into a canonical rational. The denominator
/// must be positive.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string to_string(const Scalar& x);

/// num / den in lowest terms. Throws std::domain_error if den is zero.
Scalar ratio(long num, long den);

int sign(const Scalar& x);
int sign(const Integer& x);

/// Least common multiple of the denominators of `values` (1 for an empty list).
Integer common_denominator(const std::vector<Scalar>& values);

/// Greatest common divisor of the absolute values (0 if all are zero).
Integer gcd_of(const std::vector<Integer>& values);

}  // namespace hirsch
