#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffsyl {

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidSignature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GradeOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A multivector with no two-sided inverse.
class NonInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedDimension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an algebraic identity that must hold by construction fails,
// e.g. a non-scalar norm. Indicates a bug, not bad input.
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cliffsyl
