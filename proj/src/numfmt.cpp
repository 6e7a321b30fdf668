#include "haul/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace haul {

std::string format_real(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  std::string text(buffer, result.ptr);
  if (text.find_first_of(".eE") == std::string::npos &&
      text.find_first_of("0123456789") != std::string::npos) {
    text += ".0";
  }
  return text;
}

std::string format_real_1dp(double value) {
  const double scaled = value * 10.0;
  const double rounded =
      (scaled >= 0.0) ? std::floor(scaled + 0.5) : std::ceil(scaled - 0.5);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.1f", rounded / 10.0);
  return buffer;
}

double parse_real(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    throw std::invalid_argument("not a real number: '" + std::string(text) +
                                "'");
  }
  return value;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace haul
