#pragma once

#include <gmpxx.h>

#include <string>

namespace nls {

// Exact arbitrary-precision scalars. GMP keeps rationals canonical
// (lowest terms, positive denominator) through all arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// Builds num/den in canonical form. Throws on den == 0.
Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q" and plain decimals like "-1.25"; exact in all cases.
Rational parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace nls
