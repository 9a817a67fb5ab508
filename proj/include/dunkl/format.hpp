#pragma once

#include <charconv>
#include <string>

namespace dunkl {

// Shortest round-trip decimal form. Locale independent and identical across
// runs, which the byte-identical output contract depends on.
inline std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace dunkl
