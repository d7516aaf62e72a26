#pragma once

#include <stdexcept>
#include <string>

namespace pancake {

// Bad arguments: t >= 0, N not a multiple of 4, alpha outside (0, h), ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The sampled curve cannot be interpreted: non-closure, y <= 0 off the poles,
// profile too narrow for the edge window.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double time)
      : std::runtime_error(what + " (t = " + std::to_string(time) + ")"), time_(time) {}

  double time() const noexcept { return time_; }

 private:
  double time_;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pancake
