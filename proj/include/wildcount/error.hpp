#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wildcount {

// Bad input from the caller (malformed spec, precondition failure). CLI exit code 2.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured scale guard.
class ScaleGuardExceeded : public UserError {
 public:
  ScaleGuardExceeded(const std::string& what, long double required)
      : UserError(what + " is too large: required enumeration size " + format_size(required) +
                  " exceeds the scale guard"),
        required_(required) {}

  long double required() const { return required_; }

 private:
  static std::string format_size(long double v);
  long double required_;
};

// Two independent computations disagreed, or an internal consistency check failed.
// CLI exit code 1.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Current enumeration guard: 10^9 unless WILDCOUNT_SCALE_GUARD overrides it.
long double scale_guard();

// Throws ScaleGuardExceeded if `required` exceeds min(limit, scale_guard()).
void check_scale(const std::string& what, long double required, long double limit);

}  // namespace wildcount
