#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace cblagrange {

// An input violates a structural invariant (ordering, positivity, reflection,
// parity, sample coverage).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed: non-convergence, missing sign change,
// rank deficiency.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Short scientific rendering for error messages.
inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace cblagrange
