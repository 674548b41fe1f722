#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace cmod {

using Integer = mpz_class;
using Rational = mpq_class;

/// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "a" or "a/b" with an optional leading sign.
Rational parse_rational(const std::string& text);

/// Converts every entry to double after a common power-of-two rescaling, so that
/// vectors with entries beyond the double range keep their relative magnitudes.
/// The returned exponent e satisfies value[i] ~= q[i] * 2^-e.
std::vector<double> to_doubles_scaled(std::span<const Rational> q, long* exponent = nullptr);

Integer lcm_of_denominators(std::span<const Rational> q);
Integer gcd_of_numerators(std::span<const Rational> q);

}  // namespace cmod
