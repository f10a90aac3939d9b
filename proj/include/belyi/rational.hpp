#ifndef BELYI_RATIONAL_HPP
#define BELYI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "belyi/errors.hpp"

namespace belyi {

// Exact rationals are GMP mpq_class throughout; values are kept canonical
// (gcd(|num|, den) = 1, den > 0, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "n" (optionally signed). Anything else is InvalidInput.
Rational rational_from_string(const std::string& s);

// Canonical "p/q" (or "n" when the denominator is 1).
std::string rational_to_string(const Rational& q);

inline Rational rational_of(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace belyi

#endif
