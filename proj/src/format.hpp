#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace netspread::detail {

// Shortest round-trip decimal form; stable across runs and platforms.
inline std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

}  // namespace netspread::detail
