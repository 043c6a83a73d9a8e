#pragma once

#include <stdexcept>
#include <string>

namespace lomnitz {

/// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gamma evaluated at a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An evaluation could not certify its accuracy target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relaxation step violates q * ln^nu(1 + h / tau0) < Gamma(1 + nu).
class StepTooLargeError : public DomainError {
 public:
  StepTooLargeError(const std::string& what, double suggested_h)
      : DomainError(what), suggested_h_(suggested_h) {}

  /// A step (in the caller's time units) that satisfies the bound.
  double suggested_h() const noexcept { return suggested_h_; }

 private:
  double suggested_h_;
};

/// Panel-exact Laplace integration requested with s * h beyond its stable range.
class InstabilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Sampled horizon too short for a Laplace probe.
class InsufficientHorizonError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace lomnitz
