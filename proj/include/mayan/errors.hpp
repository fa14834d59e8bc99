#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mayan {

/// Input outside the domain of an operation (e.g. a negative day for the Long Count).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structurally well-formed value that breaks a canonical-form invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Calendar Round pair that no day realizes.
class InvalidDateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Text that does not match a notation grammar. `position` is a 0-based
/// character offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mayan
