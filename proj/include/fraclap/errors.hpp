#pragma once

#include <stdexcept>
#include <string>

namespace fraclap {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a point where the target function is singular.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Parameter combination the construction explicitly excludes (e.g. the
// 1D Dirac lift at s = 1/2, or the power-law constant at 2s = n).
class UnsupportedCaseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numerical procedure failed to reach its accuracy contract.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fraclap
