#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fraclap/frac_power.hpp"
#include "fraclap/grid.hpp"

// Brute-force cross-checks for the analytic modules. Nothing here calls
// into the series or closed-form code it is meant to verify.
namespace fraclap::oracle {

struct QuadratureRule {
  enum class Kind { trapezoid, simpson };

  Kind kind = Kind::simpson;
  std::int64_t nodes = 1001;
  double lo = -1.0;
  double hi = 1.0;

  void validate() const;
  std::vector<double> weights() const;
  double step() const { return (hi - lo) / static_cast<double>(nodes - 1); }
};

/// Integral of f over the rule's interval with the rule's fixed nodes.
double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

struct OracleValue {
  double value;
  bool under_resolved;  // fewer than 8k nodes for mode k
};

/// (u, e_k) on (-1,1) from the samples of a 1D field; the field grid must
/// coincide with the rule's nodes.
OracleValue coefficient_oracle(const Field& field, std::int64_t k, const QuadratureRule& rule);

/// sum_k (k pi / 2)^{2s} c_k sin[k pi (x+1)/2] with coeffs[k-1] = c_k.
double apply_spectral_operator(std::span<const double> coeffs, double s, double x);

enum class ClassicalProblem { constant_rhs_1d, dirac_1d };

/// s = 1 solutions with zero boundary data: (1 - x^2)/2 and (1 - |x|)/2.
double classical_reference(ClassicalProblem problem, double x);

/// Max |5-point Laplacian| over interior nodes of a 2D field with spacing h.
double discrete_laplacian_residual(const Field& field2d, double h);

/// 5-point Laplacian of f at (x, y).
double five_point_laplacian(const std::function<double(double, double)>& f, double x, double y,
                            double h);

}  // namespace fraclap::oracle
