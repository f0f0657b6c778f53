#pragma once

#include <gmpxx.h>

#include <string>

namespace polyneck {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b(base);
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace polyneck
