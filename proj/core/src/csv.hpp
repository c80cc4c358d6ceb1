#pragma once

// Round-trip decimal formatting of binary64 for all numeric CSV output.

#include <charconv>
#include <string>

namespace nsrom::csv {

inline std::string format(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace nsrom::csv
