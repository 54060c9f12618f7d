#include "hirsch/rational.hpp"

#include <cctype>

namespace hirsch {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(1);
  if (slash != std::string_view::npos) {
    d = Integer(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) {
  // mpq_class::get_str already omits a unit denominator.
  return x.get_str(10);
}

Scalar ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

int sign(const Scalar& x) { return sgn(x); }
int sign(const Integer& x) { return sgn(x); }

Integer common_denominator(const std::vector<Scalar>& values) {
  Integer l(1);
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

Integer gcd_of(const std::vector<Integer>& values) {
  Integer g(0);
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

}  // namespace hirsch
