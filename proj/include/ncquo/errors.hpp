#pragma once

#include <stdexcept>
#include <string>

namespace ncquo {

/// Base class for every algebraic refusal raised by the library.
///
/// The CLI maps this family to exit code 3, so anything thrown from here
/// means "the input is well formed but the operation is not defined on it".
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element (usually a leading coefficient) has no two-sided inverse.
class NotInvertible : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Inversion of the additive identity in a field.
class ZeroDivision : public NotInvertible {
 public:
  using NotInvertible::NotInvertible;
};

class DimensionMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Pseudodivision needs the divisor's leading coefficient to commute with
/// the divisor's coefficients.
class NotCentral : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotMonic : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Raised by skew operations that are only implemented for sigma = id.
class UnsupportedSigma : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NegativeLeftShift : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// An iteration exceeded its hard cap without reaching its stopping rule.
class NoConvergence : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace ncquo
