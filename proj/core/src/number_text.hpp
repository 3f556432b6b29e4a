#pragma once

#include <charconv>
#include <string>

namespace extropy::detail {

// Shortest round-trip text of v.
inline std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace extropy::detail
