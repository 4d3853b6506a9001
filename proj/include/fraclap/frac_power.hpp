#pragma once

#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

/// Fractional exponent s of (-Delta)^s, validated to lie in (0,1).
///
/// The series evaluators also accept the classical limit s = 1 for
/// oracle comparisons; such a value is built only through classical()
/// and reports is_classical() so that closed-form modules can reject it.
class FracPower {
 public:
  explicit FracPower(double s) : value_(s) {
    if (!(s > 0.0 && s < 1.0)) {
      throw DomainError("fractional power must lie in (0,1), got " + std::to_string(s));
    }
  }

  static FracPower classical() { return FracPower(1.0, ClassicalTag{}); }

  double value() const { return value_; }
  bool is_classical() const { return value_ == 1.0; }

  bool below_quarter() const { return value_ < 0.25; }
  bool below_half() const { return value_ < 0.5; }
  bool above_half() const { return value_ > 0.5; }
  bool above_three_quarters() const { return value_ > 0.75; }
  bool is_half() const { return value_ == 0.5; }

  // Throws for the classical limit.
  void require_fractional(const char* where) const {
    if (is_classical()) {
      throw DomainError(std::string(where) + ": s = 1 is admitted only by the series evaluators");
    }
  }

  friend bool operator==(const FracPower&, const FracPower&) = default;

 private:
  struct ClassicalTag {};
  FracPower(double s, ClassicalTag) : value_(s) {}

  double value_;
};

}  // namespace fraclap
