#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fraclap/frac_power.hpp"
#include "fraclap/summation.hpp"

namespace fraclap {

/// Dirichlet eigenpair of -d^2/dx^2 on (-1,1):
/// lambda_k = (k pi / 2)^2, e_k(x) = sin[k pi (x + 1) / 2], unit L2 norm.
struct EigenPair1D {
  std::int64_t k;

  explicit EigenPair1D(std::int64_t index);
  double lambda() const;
  // Exactly 0 at x = +-1.
  double operator()(double x) const;
};

/// Dirichlet eigenpair on the square (-1,1)^2, e_{k,m}(x,y) = e_k(x) e_m(y).
struct EigenPair2D {
  std::int64_t k;
  std::int64_t m;

  EigenPair2D(std::int64_t k_index, std::int64_t m_index);
  double lambda() const;
  double operator()(double x, double y) const;
};

// ---------------------------------------------------------------------------
// Right-hand side f = 1 on (-1,1)

/// Spectral solution for f = 1 with zero boundary data,
///   u_s(x) = 2 (2/pi)^{2s+1} sum_{m>=0} (2m+1)^{-(2s+1)} sin[(2m+1) pi (x+1)/2],
/// truncated to m < max_index. The weights are computed once, so a single
/// object can be evaluated at many points cheaply.
class ConstantRhsSeries {
 public:
  ConstantRhsSeries(FracPower s, TruncationPolicy trunc);

  FracPower power() const { return s_; }
  const TruncationPolicy& truncation() const { return trunc_; }

  double operator()(double x) const;
  /// Value at x = -1 + d (equivalently 1 - d) for d in [0,2]. Keeps full
  /// precision for tiny d where x + 1 would round.
  double at_boundary_distance(double d) const;
  std::vector<double> evaluate(std::span<const double> xs) const;
  std::vector<double> evaluate_at_boundary_distances(std::span<const double> ds) const;

 private:
  FracPower s_;
  TruncationPolicy trunc_;
  std::vector<double> weights_;
};

double spectral_constant_rhs_1d(double x, FracPower s, const TruncationPolicy& trunc);

/// (u_s, e_k) for k = 1..count: zero for even k, 2(2/pi)^{2s+1} k^{-(2s+1)} for odd k.
std::vector<double> fourier_coefficients_constant_rhs(FracPower s, std::int64_t count);

// ---------------------------------------------------------------------------
// Right-hand side delta_0, homogeneous Dirichlet data

/// w_{1,s}(x) = (2/pi)^{2s} sum_{m>=0} (2m+1)^{-2s} cos[(2m+1) pi x / 2].
/// Diverges at x = 0 for s <= 1/2; the truncated sum is still returned.
class DiracSeries1D {
 public:
  DiracSeries1D(FracPower s, TruncationPolicy trunc);

  double operator()(double x) const;
  std::vector<double> evaluate(std::span<const double> xs) const;

 private:
  FracPower s_;
  TruncationPolicy trunc_;
  std::vector<double> weights_;
};

double spectral_dirac_1d(double x, FracPower s, const TruncationPolicy& trunc);

/// The same series in its sine form
/// (2/pi)^{2s} sum (-1)^m (2m+1)^{-2s} sin[(2m+1) pi (x+1)/2], summed term by
/// term with no recurrences. Used to cross-check the cosine form.
double spectral_dirac_1d_sine_form(double x, FracPower s, const TruncationPolicy& trunc);

/// w_{2,s}(x,y) = sum_{k,m>=0} (2/pi)^{2s} [(2k+1)^2 + (2m+1)^2]^{-s}
///                cos[(2k+1) pi x/2] cos[(2m+1) pi y/2],  k, m < max_index.
///
/// Summation order: for each k the full inner sum over m is formed first,
/// then the rows are added with k ascending. Where |sin(pi y/2)| > 1e-6 the
/// inner sum is computed by summation by parts against the closed-form
/// partial sums of cos[(2m+1) pi y/2]; otherwise the raw terms are added.
class DiracSeries2D {
 public:
  DiracSeries2D(FracPower s, TruncationPolicy trunc);

  double operator()(double x, double y) const;
  /// Tensor-grid evaluation, row-major with x fastest.
  std::vector<double> evaluate_grid(std::span<const double> xs, std::span<const double> ys) const;

 private:
  std::vector<double> inner_sums(double y) const;
  double outer_sum(double x, std::span<const double> inner) const;

  FracPower s_;
  TruncationPolicy trunc_;
  std::int64_t n_;
  std::vector<double> weights_;  // n_ x n_, symmetric, prefactor included
};

double spectral_dirac_2d(double x, double y, FracPower s, const TruncationPolicy& trunc);

/// Raw block sum_{m=p}^{P-1} [(2k+1)^2 + (2m+1)^2]^{-s} cos[(2m+1) pi y / 2]
/// of one row of the 2D series, without the (2/pi)^{2s} prefactor.
double dirac2d_row_block(std::int64_t k, std::int64_t p, std::int64_t P, double y, FracPower s);

// ---------------------------------------------------------------------------
// Partial-sum identities

/// sum_{m=p}^{P-1} cos[(2m+1) pi x / 2] = (sin(P pi x) - sin(p pi x)) / (2 sin(pi x / 2)).
/// Throws SingularityError when |sin(pi x/2)| < 1e-14.
double dirichlet_kernel_sum(std::int64_t p, std::int64_t P, double x);

/// v_N(y) = 2 sum_{m<N} 4 / (pi^2 (2m+1)^2) sin[(2m+1) pi y / 2].
double partial_sum_vN(double y, std::int64_t N);

/// Closed form v_N''(y) = -(1 - cos(N pi y)) / sin(pi y / 2); y != 0.
double vN_second_derivative(double y, std::int64_t N);

// ---------------------------------------------------------------------------
// Divergence / convergence probes

enum class ProbeSeries { w1_at_0, w2_at_origin, vN_prime_at_0 };

std::string_view to_string(ProbeSeries p);

struct ProbePoint {
  std::int64_t terms;
  double partial_sum;
};

struct ThresholdCrossing {
  double threshold;
  std::optional<std::int64_t> terms;  // nullopt: not crossed within the budget
};

struct GrowthReport {
  ProbeSeries series;
  double parameter;
  std::int64_t terms_used = 0;
  double final_partial_sum = 0.0;
  std::vector<ProbePoint> trajectory;  // partial sums at 1, 10, 100, ... terms and at the end
  std::vector<ThresholdCrossing> crossings;
  // Partial sums are certified lower bounds of block partial sums rather
  // than plain term sums (w2 rows completed by an integral tail bound).
  bool lower_bound = false;
  // Convergent series: upper bound on the dropped tail, and whether the
  // last 10x-truncation difference is within the stabilisation tolerance.
  std::optional<double> tail_bound;
  bool stabilized = false;
  std::optional<double> last_decade_difference;

  bool crossed(double threshold) const;
};

inline constexpr std::int64_t kDefaultProbeBudget = 100'000'000;
inline constexpr double kProbeStabilizationTolerance = 1e-4;

/// Runs the partial sums of one of
///   w1_at_0:        (2/pi)^{2s} sum (2m+1)^{-2s}              parameter = s
///   w2_at_origin:   (2/pi)^{2s} sum [(2k+1)^2+(2m+1)^2]^{-s}  parameter = s
///   vN_prime_at_0:  (4/pi) sum_{m<N} 1/(2m+1)                 parameter = N
/// until every threshold is crossed or budget scalar terms are spent.
GrowthReport divergence_probe(ProbeSeries series, double parameter,
                              std::span<const double> thresholds,
                              std::int64_t budget = kDefaultProbeBudget);

}  // namespace fraclap
