#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meanconvex {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The numeric shadow of a formal quantity could not be computed reliably.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Probe inputs that cannot be arranged so that every p-th power stays in the field.
class ShapingError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, zero_division, non_integer_exponent };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

}  // namespace meanconvex
