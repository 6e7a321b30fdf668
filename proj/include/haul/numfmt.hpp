#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace haul {

/// Shortest decimal text that parses back to exactly the same double,
/// with at least one decimal place so reals stay visually distinct from
/// integers ("5" becomes "5.0").
std::string format_real(double value);

/// Fixed-point text with one decimal place, rounding half away from
/// zero. Matches how costs are quoted in human-facing output.
std::string format_real_1dp(double value);

/// Strict parsers: the whole input must be consumed. Throw
/// std::invalid_argument otherwise.
double parse_real(std::string_view text);
std::int64_t parse_int(std::string_view text);

}  // namespace haul
