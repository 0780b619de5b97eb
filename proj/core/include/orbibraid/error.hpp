#pragma once

#include <stdexcept>
#include <string>

namespace orbibraid {

/// Raised when input data breaks a named invariant of a domain type.
/// The invariant name is stable and is what the CLI reports.
class InvariantViolation : public std::invalid_argument {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : std::invalid_argument(invariant + ": " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

class UnknownGenerator : public InvariantViolation {
 public:
  explicit UnknownGenerator(const std::string& name)
      : InvariantViolation("known_generator", "unknown generator '" + name + "'") {}
};

/// Enumeration would exceed the configured size cap.
class SearchTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace orbibraid
