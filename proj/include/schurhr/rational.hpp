#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schurhr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `p/q` or an integer, with optional leading sign. No decimals.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

Rational binomial(long n, long k);

Rational power(const Rational& base, unsigned long exponent);

}  // namespace schurhr
