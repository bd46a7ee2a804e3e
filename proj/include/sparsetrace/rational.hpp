#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sparsetrace {

// mpq_class keeps values canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

/// Always "num/den", including integers ("8/1").
std::string to_fraction_string(const Rational& r);

/// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace sparsetrace
