#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace reconfrel {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "0.99", "1", "-0.5" or "3/4" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rat parse_decimal(const std::string& text);

/// Renders a rational rounded to `sig_digits` significant decimal digits,
/// trailing fractional zeros stripped. Rounding is half-up.
std::string decimal_string(const Rat& value, int sig_digits);

/// Renders with exactly `decimals` digits after the point (half-up).
std::string fixed_decimal_string(const Rat& value, int decimals);

/// "num/den" (or "num" when the denominator is 1).
std::string rational_string(const Rat& value);

Int pow10(int e);

}  // namespace reconfrel
