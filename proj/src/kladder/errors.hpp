#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kladder {

// Thrown when an input exceeds a desk-scale cap. The CLI maps this to a
// dedicated exit code, so keep it distinct from generic invalid input.
struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Desk-scale caps can be raised via KLADDER_MAX_N (at the user's risk).
inline int max_n_override() {
  if (const char* s = std::getenv("KLADDER_MAX_N")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 0;
}

inline void check_size(int actual, int cap, const std::string& what) {
  int o = max_n_override();
  int limit = o > cap ? o : cap;
  if (actual > limit)
    throw SizeLimitError(what + ": size " + std::to_string(actual) +
                         " exceeds limit " + std::to_string(limit) +
                         " (override with KLADDER_MAX_N)");
}

}  // namespace kladder
