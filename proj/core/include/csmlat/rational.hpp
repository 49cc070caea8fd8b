#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace csmlat {

// All coefficient arithmetic in the library is exact: arbitrary-precision
// rationals for coefficients, arbitrary-precision integers for counts and
// binomials. No floating point anywhere in the core.
using Rational = mpq_class;
using Integer = mpz_class;

/// C(n, k); zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

/// base^exp over the integers; 0^0 = 1.
inline Integer int_pow(unsigned long base, unsigned long exp) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
  return result;
}

/// Reduced fraction from parts; throws on a zero denominator.
inline Rational rational_from_parts(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("rational: zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p" when the denominator is 1, otherwise "p/q"; always reduced.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace csmlat
