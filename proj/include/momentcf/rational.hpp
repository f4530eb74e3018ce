#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace momentcf {

// Exact scalars. Every quantity in the library is a rational number with an
// arbitrary-precision numerator and a positive arbitrary-precision
// denominator, kept in lowest terms. Nothing is ever rounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with den != 0; normalizes the sign so the denominator is positive.
Rational make_rational(Integer num, Integer den);

// base^exp for exp >= 0, with pow_rational(x, 0) == 1 (including x == 0).
Rational pow_rational(const Rational& base, int exp);

// Exact square root, or nullopt when x is not the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

// Row n of Pascal's triangle: C(n, 0..n), built by the additive recurrence.
std::vector<Integer> pascal_row(int n);

// "p" or "p/q", lowest terms, denominator omitted when 1.
std::string to_string(const Rational& r);

// Strict inverse of to_string. Accepts an optional sign, digits, and an
// optional "/digits" part with a nonzero denominator. Decimal notation is
// rejected so no rounding can sneak into the pipeline. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace momentcf
