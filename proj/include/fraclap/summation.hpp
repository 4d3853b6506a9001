#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "fraclap/errors.hpp"

namespace fraclap {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
/// correct when an addend is larger in magnitude than the running sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

enum class Accumulation { ascending, compensated };

/// Cut-off for an infinite series. max_index counts terms per series
/// dimension (indices 0..max_index-1 for odd-harmonic series).
struct TruncationPolicy {
  std::int64_t max_index = 10000;
  Accumulation accumulation = Accumulation::compensated;
  std::optional<double> tail_estimate;

  static TruncationPolicy with(std::int64_t n, Accumulation acc = Accumulation::compensated) {
    TruncationPolicy p;
    p.max_index = n;
    p.accumulation = acc;
    p.validate();
    return p;
  }

  void validate() const {
    if (max_index < 1) throw DomainError("truncation max_index must be >= 1");
  }
};

// Sums with either strategy behind one interface; the branch is hoisted
// by callers that care about speed.
class Accumulator {
 public:
  explicit Accumulator(Accumulation mode) : mode_(mode) {}

  void add(double v) {
    if (mode_ == Accumulation::compensated) {
      compensated_ += v;
    } else {
      plain_ += v;
    }
  }

  double value() const {
    return mode_ == Accumulation::compensated ? compensated_.value() : plain_;
  }

 private:
  Accumulation mode_;
  CompensatedSum compensated_;
  double plain_ = 0.0;
};

}  // namespace fraclap
