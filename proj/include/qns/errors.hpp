/// @file errors.hpp
/// @brief Exception types shared by every qns module.
#pragma once

#include <stdexcept>
#include <string>

namespace qns {

/// Operands violate an operation's stated precondition (grid or theta
/// mismatch, axis out of range, negative time, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Schatten exponent outside the even-integer set the representation supports.
class UnsupportedExponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A user-supplied function produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular Fourier multiplier applied to data it cannot act on.
class SingularMultiplier : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or incompatible QNSF snapshot.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qns
