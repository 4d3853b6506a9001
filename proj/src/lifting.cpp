#include "fraclap/lifting.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"
#include "fraclap/special_fn.hpp"
#include "odd_harmonics.hpp"

namespace fraclap {
namespace {

using std::numbers::pi;

constexpr double kCoefficientTolerance = 1e-10;
constexpr double kCoefficientFailure = 1e-9;
constexpr int kMaxDepth = 40;

struct SimpsonResult {
  double value;
  double error;
};

double simpson(double fa, double fm, double fb, double width) {
  return width / 6.0 * (fa + 4.0 * fm + fb);
}

SimpsonResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth >= kMaxDepth || std::fabs(delta) <= 15.0 * tol) {
    return {left + right + delta / 15.0, std::fabs(delta) / 15.0};
  }
  const auto l = adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
  const auto r = adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  return {l.value + r.value, l.error + r.error};
}

// sin[k pi (x+1)/2] for odd k, folded so both endpoints are exact zeros.
double odd_mode(std::int64_t k, double x) {
  const double d = 1.0 - std::fabs(x);
  if (d == 0.0) return 0.0;
  return std::sin(static_cast<double>(k) * pi * d / 2.0);
}

void require_square(double x, double y) {
  if (!(x >= -1.0 && x <= 1.0 && y >= -1.0 && y <= 1.0)) {
    throw DomainError("point outside the closed square [-1,1]^2");
  }
}

}  // namespace

double phi1(double x, FracPower s) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("phi1: point outside [-1,1]");
  if (std::fabs(x) == 1.0) return 0.0;
  return std::pow(x * x + 1.0, s.value() - 1.0) - std::pow(2.0, s.value() - 1.0);
}

double LiftCoefficients::operator[](std::int64_t k) const {
  if (k < 1 || k > 2 * count) throw DomainError("lift coefficient index out of range");
  return values[static_cast<std::size_t>(k - 1)];
}

LiftCoefficients lift_coefficients(FracPower s, std::int64_t count, std::int64_t nodes) {
  s.require_fractional("lift_coefficients");
  if (count < 1) throw DomainError("lift coefficient count must be >= 1");
  if (nodes < 64) throw DomainError("lift quadrature needs at least 64 panels");
  LiftCoefficients out{s, count, nodes, std::vector<double>(static_cast<std::size_t>(2 * count), 0.0)};
  const double panel = 1.0 / static_cast<double>(nodes);
  const double panel_tol = kCoefficientTolerance / static_cast<double>(nodes);
  for (std::int64_t j = 0; j < count; ++j) {
    const std::int64_t k = 2 * j + 1;
    const auto integrand = [&](double x) {
      return phi1(x, s) * std::sin(static_cast<double>(k) * pi * (x + 1.0) / 2.0);
    };
    double value = 0.0;
    double error = 0.0;
    for (std::int64_t p = 0; p < nodes; ++p) {
      const double a = static_cast<double>(p) * panel;
      const double b = p + 1 == nodes ? 1.0 : static_cast<double>(p + 1) * panel;
      const double fa = integrand(a);
      const double fm = integrand(0.5 * (a + b));
      const double fb = integrand(b);
      const auto r = adaptive_simpson(integrand, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a),
                                      panel_tol, 0);
      value += r.value;
      error += r.error;
    }
    if (error > kCoefficientFailure) {
      throw AccuracyError("lift coefficient A_" + std::to_string(k) +
                          " did not converge: error estimate " + std::to_string(error));
    }
    out.values[static_cast<std::size_t>(k - 1)] = 2.0 * value;
  }
  return out;
}

double cosh_ratio(std::int64_t k, double y) {
  const double ay = std::fabs(y);
  const double kp = static_cast<double>(k) * pi;
  return std::exp(kp * (ay - 1.0) / 2.0) * (1.0 + std::exp(-kp * ay)) / (1.0 + std::exp(-kp));
}

double lift_half(double x, double y, const LiftCoefficients& coeffs) {
  require_square(x, y);
  CompensatedSum acc;
  for (std::int64_t j = 0; j < coeffs.count; ++j) {
    const std::int64_t k = 2 * j + 1;
    acc += coeffs.odd(j) * odd_mode(k, x) * cosh_ratio(k, y);
  }
  return acc.value();
}

double harmonic_lift_2d(double x, double y, FracPower s, const LiftCoefficients& coeffs) {
  if (!(coeffs.s == s)) throw DomainError("lift coefficients were computed for a different s");
  return lift_half(x, y, coeffs) + lift_half(y, x, coeffs) + std::pow(2.0, s.value() - 1.0);
}

namespace {

// table[iy * xs.size() + ix] = v~(xs[ix], ys[iy]).
std::vector<double> lift_half_grid(std::span<const double> xs, std::span<const double> ys,
                                   const LiftCoefficients& coeffs) {
  std::vector<double> thetas(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) thetas[i] = pi * (1.0 - std::fabs(xs[i])) / 2.0;
  std::vector<double> out(xs.size() * ys.size());
  std::vector<double> weights(static_cast<std::size_t>(coeffs.count));
  std::vector<double> row(xs.size());
  for (std::size_t iy = 0; iy < ys.size(); ++iy) {
    for (std::int64_t j = 0; j < coeffs.count; ++j) {
      weights[static_cast<std::size_t>(j)] = coeffs.odd(j) * cosh_ratio(2 * j + 1, ys[iy]);
    }
    detail::sum_odd_harmonics(weights, detail::Trig::sine, thetas, Accumulation::compensated, row);
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      out[iy * xs.size() + ix] = std::fabs(xs[ix]) == 1.0 ? 0.0 : row[ix];
    }
  }
  return out;
}

}  // namespace

std::vector<double> harmonic_lift_grid(std::span<const double> xs, std::span<const double> ys,
                                       const LiftCoefficients& coeffs) {
  for (double x : xs) require_square(x, 0.0);
  for (double y : ys) require_square(0.0, y);
  const auto direct = lift_half_grid(xs, ys, coeffs);
  const auto swapped = lift_half_grid(ys, xs, coeffs);  // v~(y, x), indexed [ix][iy]
  const double corner = std::pow(2.0, coeffs.s.value() - 1.0);
  std::vector<double> out(direct.size());
  for (std::size_t iy = 0; iy < ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      out[iy * xs.size() + ix] =
          direct[iy * xs.size() + ix] + swapped[ix * ys.size() + iy] + corner;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

double lift_constant_1d(FracPower s) {
  s.require_fractional("spectral_dirac_solution_1d");
  if (s.is_half()) {
    throw UnsupportedCaseError(
        "spectral_dirac_solution_1d: s = 1/2 is excluded (no power-law boundary constant)");
  }
  return fundamental_constant(Dim::one, s);
}

}  // namespace

DiracSolution1D::DiracSolution1D(FracPower s, TruncationPolicy trunc)
    : series_(s, trunc), lift_(lift_constant_1d(s)) {}

std::vector<double> DiracSolution1D::evaluate(std::span<const double> xs) const {
  auto out = series_.evaluate(xs);
  for (double& v : out) v += lift_;
  return out;
}

double spectral_dirac_solution_1d(double x, FracPower s, const TruncationPolicy& trunc) {
  return DiracSolution1D(s, trunc)(x);
}

DiracSolution2D::DiracSolution2D(FracPower s, TruncationPolicy trunc, LiftCoefficients coeffs)
    : s_(s), series_(s, trunc), coeffs_(std::move(coeffs)),
      a_(fundamental_constant(Dim::two, s)) {
  if (!(coeffs_.s == s)) throw DomainError("lift coefficients were computed for a different s");
}

double DiracSolution2D::operator()(double x, double y) const {
  return series_(x, y) + a_ * harmonic_lift_2d(x, y, s_, coeffs_);
}

std::vector<double> DiracSolution2D::evaluate_grid(std::span<const double> xs,
                                                   std::span<const double> ys) const {
  auto w = series_.evaluate_grid(xs, ys);
  const auto v = harmonic_lift_grid(xs, ys, coeffs_);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += a_ * v[i];
  return w;
}

double spectral_dirac_solution_2d(double x, double y, FracPower s, const TruncationPolicy& trunc,
                                  const LiftCoefficients& coeffs) {
  return DiracSolution2D(s, trunc, coeffs)(x, y);
}

}  // namespace fraclap
