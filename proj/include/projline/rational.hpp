#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace projline {

using Integer = mpz_class;
// mpq_class keeps itself in lowest terms with a positive denominator after
// every arithmetic operation; values built from raw parts go through
// make_rational, which canonicalizes.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q", and plain decimals such as "-0.125".
Rational parse_rational(std::string_view text);

// Decimal rendering with `digits` digits after the point, truncated toward
// the nearest representable value.
std::string to_decimal(const Rational& q, int digits);

int sign(const Rational& q);
int sign(const Integer& z);

}  // namespace projline
