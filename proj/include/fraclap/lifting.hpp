#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fraclap/frac_power.hpp"
#include "fraclap/spectral_series.hpp"
#include "fraclap/summation.hpp"

namespace fraclap {

/// phi_1(x) = (x^2 + 1)^{s-1} - 2^{s-1}: the side trace of the 2D Dirac
/// boundary data (divided by a(2,s)) shifted to vanish at the corners.
double phi1(double x, FracPower s);

/// Sine coefficients A_k = int_{-1}^{1} phi_1(x) sin[k pi (x+1)/2] dx.
/// Even k vanish by parity; odd k are stored for k = 1, 3, ..., 2 count - 1.
struct LiftCoefficients {
  FracPower s;
  std::int64_t count;
  std::int64_t quadrature_nodes;
  std::vector<double> values;  // values[k - 1] = A_k, size 2 count

  double operator[](std::int64_t k) const;  // A_k, k >= 1
  double odd(std::int64_t j) const { return (*this)[2 * j + 1]; }
};

inline constexpr std::int64_t kDefaultLiftCount = 500;
inline constexpr std::int64_t kDefaultLiftNodes = 64;

/// Computes A_{2j+1} = 2 int_0^1 phi_1(x) sin[(2j+1) pi (x+1)/2] dx by adaptive
/// Simpson on `nodes` equal panels. Throws AccuracyError when the summed
/// Richardson error estimate of a coefficient exceeds 1e-9.
LiftCoefficients lift_coefficients(FracPower s, std::int64_t count = kDefaultLiftCount,
                                   std::int64_t nodes = kDefaultLiftNodes);

/// cosh(k pi y / 2) / cosh(k pi / 2) without forming either cosh.
double cosh_ratio(std::int64_t k, double y);

/// v~(x,y) = sum_k A_k sin[k pi (x+1)/2] cosh(k pi y/2) / cosh(k pi/2):
/// harmonic in the square, phi_1 on y = +-1, zero on x = +-1.
double lift_half(double x, double y, const LiftCoefficients& coeffs);

/// Harmonic function with boundary data (t^2 + 1)^{s-1} on every side:
/// v(x,y) = v~(x,y) + v~(y,x) + 2^{s-1}.
double harmonic_lift_2d(double x, double y, FracPower s, const LiftCoefficients& coeffs);

/// Tensor-grid version of harmonic_lift_2d, row-major with x fastest.
std::vector<double> harmonic_lift_grid(std::span<const double> xs, std::span<const double> ys,
                                       const LiftCoefficients& coeffs);

/// Spectral solution of (-Delta)^s u = delta_0 on (-1,1) whose boundary
/// values match the Riesz fundamental solution: u = w_{1,s} + a(1,s).
/// s = 1/2 is rejected with UnsupportedCaseError.
class DiracSolution1D {
 public:
  DiracSolution1D(FracPower s, TruncationPolicy trunc);

  double lift() const { return lift_; }
  double operator()(double x) const { return series_(x) + lift_; }
  std::vector<double> evaluate(std::span<const double> xs) const;

 private:
  DiracSeries1D series_;
  double lift_;
};

double spectral_dirac_solution_1d(double x, FracPower s, const TruncationPolicy& trunc);

/// u_s = w_{2,s} + a(2,s) v_{2,s} on the square.
class DiracSolution2D {
 public:
  DiracSolution2D(FracPower s, TruncationPolicy trunc, LiftCoefficients coeffs);

  double operator()(double x, double y) const;
  std::vector<double> evaluate_grid(std::span<const double> xs, std::span<const double> ys) const;
  const DiracSeries2D& homogeneous_part() const { return series_; }
  const LiftCoefficients& coefficients() const { return coeffs_; }
  double lift_scale() const { return a_; }

 private:
  FracPower s_;
  DiracSeries2D series_;
  LiftCoefficients coeffs_;
  double a_;
};

double spectral_dirac_solution_2d(double x, double y, FracPower s, const TruncationPolicy& trunc,
                                  const LiftCoefficients& coeffs);

}  // namespace fraclap
