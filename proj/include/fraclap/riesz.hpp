#pragma once

#include <span>

#include "fraclap/frac_power.hpp"
#include "fraclap/special_fn.hpp"

namespace fraclap {

/// Default constant of the logarithmic fundamental solution a_log ln|x|
/// for n = 1, s = 1/2, the usual normalisation of the 1D half-Laplacian.
inline constexpr double kDefaultLogConstant = -0.3183098861837907;  // -1/pi

/// Solution c(n,s)(1 - |x|^2)^s of the Riesz problem on the unit ball with
/// right-hand side 1 and zero exterior data.
class RieszBallSolution {
 public:
  RieszBallSolution(Dim n, FracPower s);

  Dim dim() const { return n_; }
  FracPower power() const { return s_; }
  double constant() const { return c_; }

  /// Requires |x| <= 1 and x.size() == n; exactly 0 on the unit sphere.
  double operator()(std::span<const double> x) const;
  double operator()(double x) const { return (*this)(std::span<const double>(&x, 1)); }

 private:
  Dim n_;
  FracPower s_;
  double c_;
};

/// Fundamental solution of (-Delta)^s on R^n: a(n,s)|x|^{2s-n}, or
/// a_log ln|x| in the logarithmic case 2s = n.
class FundamentalSolution {
 public:
  FundamentalSolution(Dim n, FracPower s, double log_constant = kDefaultLogConstant);

  Dim dim() const { return n_; }
  FracPower power() const { return s_; }
  bool is_log_case() const { return log_case_; }
  // a(n,s), or a_log in the logarithmic case.
  double constant() const { return a_; }

  /// Throws SingularityError at the origin.
  double operator()(std::span<const double> x) const;
  double operator()(double x) const { return (*this)(std::span<const double>(&x, 1)); }
  double operator()(double x, double y) const;

  /// The same formula read as exterior Dirichlet data on R^n minus the domain.
  double exterior_trace(std::span<const double> x) const { return (*this)(x); }

  double at_radius(double r) const;

 private:
  Dim n_;
  FracPower s_;
  bool log_case_;
  double a_;
};

double riesz_constant_rhs(std::span<const double> x, Dim n, FracPower s);
double riesz_constant_rhs(double x, FracPower s);

double fundamental_solution(std::span<const double> x, Dim n, FracPower s,
                            double log_constant = kDefaultLogConstant);

/// a(2,s)(t^2 + 1)^{s-1}: the fundamental solution restricted to any side
/// of the square (-1,1)^2, parametrised by the coordinate along the side.
double dirac_boundary_trace_2d(double t, FracPower s);

}  // namespace fraclap
