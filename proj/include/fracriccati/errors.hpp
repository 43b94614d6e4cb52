#pragma once

#include <stdexcept>
#include <string>

namespace fracriccati {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole of Γ (or of a Γ-built quantity).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerator and denominator poles coincide (0/0 in a Γ ratio).
class IndeterminateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The Riccati equation has b = 0 and no Bessel representation.
class DegenerateRegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An iterative or refining method ran out of budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive step size collapsed; usually a pole of the solution.
class StepUnderflowError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace fracriccati
