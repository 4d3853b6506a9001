#include "fraclap/riesz.hpp"

#include <cmath>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {
namespace {

double euclidean_norm(std::span<const double> x) {
  if (x.size() == 1) return std::fabs(x[0]);
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

void require_dimension(std::span<const double> x, Dim n) {
  if (x.size() != static_cast<std::size_t>(as_int(n))) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                      std::to_string(as_int(n)));
  }
}

}  // namespace

RieszBallSolution::RieszBallSolution(Dim n, FracPower s)
    : n_(n), s_(s), c_(riesz_ball_constant(n, s)) {}

double RieszBallSolution::operator()(std::span<const double> x) const {
  require_dimension(x, n_);
  const double r = euclidean_norm(x);
  if (!(r <= 1.0)) {
    throw DomainError("riesz_constant_rhs: point outside the closed unit ball");
  }
  if (r == 1.0) return 0.0;
  // (1 - r)(1 + r) keeps full relative precision next to the sphere.
  return c_ * std::pow((1.0 - r) * (1.0 + r), s_.value());
}

FundamentalSolution::FundamentalSolution(Dim n, FracPower s, double log_constant)
    : n_(n), s_(s), log_case_(fraclap::is_log_case(n, s)),
      a_(log_case_ ? log_constant : fundamental_constant(n, s)) {
  s.require_fractional("FundamentalSolution");
}

double FundamentalSolution::at_radius(double r) const {
  if (!(r > 0.0)) throw SingularityError("fundamental solution is singular at the origin");
  if (log_case_) return a_ * std::log(r);
  return a_ * std::pow(r, 2.0 * s_.value() - as_int(n_));
}

double FundamentalSolution::operator()(std::span<const double> x) const {
  require_dimension(x, n_);
  return at_radius(euclidean_norm(x));
}

double FundamentalSolution::operator()(double x, double y) const {
  const double p[2] = {x, y};
  return (*this)(std::span<const double>(p, 2));
}

double riesz_constant_rhs(std::span<const double> x, Dim n, FracPower s) {
  return RieszBallSolution(n, s)(x);
}

double riesz_constant_rhs(double x, FracPower s) { return RieszBallSolution(Dim::one, s)(x); }

double fundamental_solution(std::span<const double> x, Dim n, FracPower s, double log_constant) {
  return FundamentalSolution(n, s, log_constant)(x);
}

double dirac_boundary_trace_2d(double t, FracPower s) {
  s.require_fractional("dirac_boundary_trace_2d");
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("boundary coordinate outside [-1,1]");
  return fundamental_constant(Dim::two, s) * std::pow(t * t + 1.0, s.value() - 1.0);
}

}  // namespace fraclap
