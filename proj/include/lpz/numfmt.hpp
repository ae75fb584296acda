#pragma once

#include <string>

namespace lpz {

/// Rounds the shortest decimal representation of `v` to `precision`
/// fractional digits, ties away from zero. Works on the decimal digits, so
/// 2.675 rounds to 2.68.
double round_half_away(double v, int precision);

/// round_half_away() printed with exactly `precision` fractional digits.
std::string format_fixed(double v, int precision);

/// At most six significant digits, no exponent, no trailing zeros, and
/// never "-0". Used for every coordinate written to SVG.
std::string format_sig6(double v);

}  // namespace lpz
