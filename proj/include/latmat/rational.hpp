#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace latmat {

// All arithmetic in this library is exact. Integers are arbitrary-precision
// and rationals are kept in canonical reduced form (positive denominator,
// gcd(num, den) = 1), which mpq_class maintains across arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized num/den. Throws ParseError if den == 0.
Rat make_rat(const Int& num, const Int& den);

// Accepts "p", "-p" or "p/q" with decimal p, q. No whitespace, no floats.
Rat parse_rational(std::string_view text);

// Strict decimal integer with optional leading '-'.
Int parse_integer(std::string_view text);
Int parse_positive_integer(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

}  // namespace latmat
