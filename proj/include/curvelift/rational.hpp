#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace curvelift {

using Rational = mpq_class;
using Integer = mpz_class;

// p/q in canonical form (mpq's two-argument constructor does not reduce).
inline Rational ratio(long p, unsigned long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Parses "p/q", "p" or "-p/q". Decimal points are rejected so that every
// value that enters the toolkit is exact.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

inline double to_double(const Rational& value) { return value.get_d(); }

int sign(const Rational& value);

// Exact conversion of a finite double (every finite double is a dyadic rational).
Rational from_double(double value);

}  // namespace curvelift
