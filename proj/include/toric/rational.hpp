#pragma once

// Exact scalars. GMP's mpq_class keeps every value in canonical form
// (positive denominator, gcd(num, den) = 1) after each arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p", "p/q" (whitespace not allowed). Throws ParseError on
/// malformed input or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& value);

/// value^exponent for any integer exponent; throws DivisionByZero for 0^(-k).
Rational pow(const Rational& value, long exponent);

/// Scales a rational vector to the unique primitive integer vector with the
/// same direction (gcd of entries 1). Zero vector maps to zero.
std::vector<Integer> primitive_integer(std::span<const Rational> v);

Integer lcm_of_denominators(std::span<const Rational> v);

double to_double(const Rational& value);

} // namespace toric
