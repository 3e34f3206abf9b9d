#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ordolab {

// All objective arithmetic is exact. Values are always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

// "7", "-3/4" or "6/5". Integers print without a denominator.
std::string to_string(const Rational& value);

// Accepts integers, "p/q" fractions and finite decimals ("0.25").
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

long double to_long_double(const Rational& value);

// Exact conversion of a finite binary floating-point value.
Rational from_double(double value);

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace ordolab
