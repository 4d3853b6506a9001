#include "fraclap/special_fn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {
namespace {

constexpr double kLanczosG = 607.0 / 128.0;

constexpr std::array<double, 15> kLanczosCoefficients = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

constexpr double kMinArgument = 0.05;
constexpr double kMaxArgument = 171.0;

// Gamma at n/2 - s (in (-1/2, 1/2) for n = 1) and at small s, both of
// which may fall below the direct-evaluation range.
double gamma_shifted(double x) {
  if (x >= kMinArgument) return gamma(x);
  return gamma(x + 1.0) / x;
}

}  // namespace

Dim dim_from_int(int n) {
  if (n != 1 && n != 2) throw DomainError("unsupported dimension " + std::to_string(n));
  return static_cast<Dim>(n);
}

double gamma(double x) {
  if (!std::isfinite(x) || x < kMinArgument || x > kMaxArgument) {
    throw DomainError("gamma: argument " + std::to_string(x) + " outside [0.05, 171]");
  }
  // Gamma(x) = sqrt(2 pi) (t)^(x - 1/2) e^{-t} A(x) / x with t = x + g - 1/2,
  // A written for Gamma(x + 1) = x Gamma(x).
  double series = kLanczosCoefficients[0];
  for (std::size_t j = 1; j < kLanczosCoefficients.size(); ++j) {
    series += kLanczosCoefficients[j] / (x + static_cast<double>(j));
  }
  const double t = x + kLanczosG + 0.5;
  const double sqrt_two_pi = std::sqrt(2.0 * std::numbers::pi);
  if (x < 140.0) {
    return sqrt_two_pi * series / x * std::pow(t, x + 0.5) * std::exp(-t);
  }
  // Split the power to stay finite near the top of the range.
  const double half = std::pow(t, 0.5 * (x + 0.5));
  return sqrt_two_pi * series / x * half * (half * std::exp(-t));
}

double riesz_ball_constant(Dim n, FracPower s) {
  s.require_fractional("riesz_ball_constant");
  const double nd = as_int(n);
  const double sv = s.value();
  return std::pow(2.0, -2.0 * sv) * gamma(nd / 2.0) /
         (gamma((nd + 2.0 * sv) / 2.0) * gamma(1.0 + sv));
}

bool is_log_case(Dim n, FracPower s) {
  return std::fabs(2.0 * s.value() - as_int(n)) < kLogCaseTolerance;
}

double fundamental_constant(Dim n, FracPower s) {
  s.require_fractional("fundamental_constant");
  if (is_log_case(n, s)) {
    throw UnsupportedCaseError(
        "log-case: 2s = n has no power-law constant; use the logarithmic fundamental solution");
  }
  const double nd = as_int(n);
  const double sv = s.value();
  return gamma_shifted(nd / 2.0 - sv) /
         (std::pow(2.0, 2.0 * sv) * std::pow(std::numbers::pi, nd / 2.0) * gamma_shifted(sv));
}

}  // namespace fraclap
