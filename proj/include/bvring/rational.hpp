#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bvring {

/// Exact arbitrary-precision rational. All coefficients in the engine are
/// carried as values of this type; nothing in the core touches floating point.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" form with an explicit denominator, e.g. "24/1", "-3/2".
inline std::string to_pq_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Shortest form: "24" for integers, "-3/2" otherwise.
inline std::string to_short_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  Rational r;
  const std::string s(text);
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out(num.get_num(), den.get_num());
  out.canonicalize();
  return out;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace bvring
