#pragma once

// Exact rational arithmetic. Rational and Count are GMP types; every
// quantity in the library (measures, weights, thresholds) is exact.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cantor {

using Rational = mpq_class;
using Count = mpz_class;

/// Parses "p/q", "p" or a finite decimal such as "0.75" or "-1.5" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with denominator 1.
std::string to_string(const Rational& r);

/// 2^exponent for any (possibly negative) exponent.
Rational pow2(long exponent);

Count pow2_count(unsigned long exponent);

/// The dyadic k/2^m strictly inside (lo, hi) with the smallest m, and the
/// smallest k for that m. Requires lo < hi.
Rational dyadic_between(const Rational& lo, const Rational& hi);

inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace cantor
