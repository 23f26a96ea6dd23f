#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gossez {

/// Exact rational scalar. GMP keeps every arithmetic result in canonical
/// form (denominator > 0, gcd(|num|, den) = 1).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q" or "p" (decimal). Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical decimal "p/q" form; integers print without "/1".
std::string to_string(const Rational& value);

inline Rational abs_value(const Rational& value) { return abs(value); }

}  // namespace gossez
