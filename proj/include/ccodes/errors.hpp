#pragma once

#include <stdexcept>
#include <string>

namespace ccodes {

/// A polynomial or integer division that was required to be exact left a remainder.
class NonExactDivision : public std::runtime_error {
 public:
  explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

/// A floating-point evaluation drifted too far from an integer.
class IntegralityFailure : public std::runtime_error {
 public:
  IntegralityFailure(const std::string& what, double deviation)
      : std::runtime_error(what), deviation_(deviation) {}

  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

/// An exhaustive enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters violate a constructor's preconditions.
class InvalidSpec : public std::invalid_argument {
 public:
  explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ccodes
