#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fraclap/errors.hpp"
#include "fraclap/lifting.hpp"
#include "fraclap/oracle.hpp"
#include "fraclap/riesz.hpp"
#include "fraclap/special_fn.hpp"

using namespace fraclap;
using std::numbers::pi;

namespace {

const LiftCoefficients& coeffs_for(double s) {
  static const LiftCoefficients c50 = lift_coefficients(FracPower(0.5));
  static const LiftCoefficients c60 = lift_coefficients(FracPower(0.6));
  static const LiftCoefficients c75 = lift_coefficients(FracPower(0.75));
  if (s == 0.5) return c50;
  if (s == 0.6) return c60;
  return c75;
}

}  // namespace

TEST_CASE("phi1") {
  for (double s : {0.3, 0.6}) {
    CHECK(phi1(1.0, FracPower(s)) == 0.0);
    CHECK(phi1(-1.0, FracPower(s)) == 0.0);
    CHECK(phi1(0.0, FracPower(s)) == doctest::Approx(1.0 - std::pow(2.0, s - 1)));
    CHECK(phi1(0.4, FracPower(s)) == phi1(-0.4, FracPower(s)));
  }
  CHECK(phi1(0.5, FracPower(0.6)) == doctest::Approx(0.15675182059945365876).epsilon(1e-14));
}

TEST_CASE("lift_coefficients: even modes vanish, A_1 against a fine trapezoid rule") {
  const auto& c = coeffs_for(0.5);
  CHECK(c.values.size() == 2 * static_cast<std::size_t>(c.count));
  for (int k = 2; k <= 40; k += 2) CHECK(c[k] == 0.0);

  oracle::QuadratureRule trap{oracle::QuadratureRule::Kind::trapezoid, 1'000'001};
  const double a1 = oracle::integrate(
      [](double x) { return phi1(x, FracPower(0.5)) * std::sin(pi * (x + 1) / 2); }, trap);
  CHECK(std::fabs(c[1] - a1) <= 1e-8);
  CHECK(c[1] == doctest::Approx(0.27872270502310247406).epsilon(1e-10));
  CHECK(c.odd(0) == c[1]);
  CHECK_THROWS_AS(lift_coefficients(FracPower(0.5), 10, 32), DomainError);
  CHECK_THROWS_AS(c[0], DomainError);
}

TEST_CASE("lift_coefficients: decay and synthesis round trip") {
  for (double s : {0.5, 0.6, 0.75}) {
    const auto& c = coeffs_for(s);
    for (int k = 1; k <= 999; k += 2) CHECK(std::fabs(c[k]) * k <= 1.0);
    for (double x : {-0.7, 0.0, 0.3, 0.9}) {
      double synth = 0.0;
      for (int k = 1; k <= 2 * c.count; ++k) synth += c[k] * std::sin(k * pi * (x + 1) / 2);
      CHECK(std::fabs(synth - phi1(x, FracPower(s))) <= 1e-4);
    }
  }
}

TEST_CASE("cosh_ratio") {
  for (int k : {1, 3, 17}) {
    for (double y : {-1.0, -0.4, 0.0, 0.8, 1.0}) {
      CHECK(cosh_ratio(k, y) ==
            doctest::Approx(std::cosh(k * pi * y / 2) / std::cosh(k * pi / 2)).epsilon(1e-13));
    }
  }
  CHECK(cosh_ratio(2001, 1.0) == 1.0);
  CHECK(std::isfinite(cosh_ratio(2001, 0.3)));
  CHECK(cosh_ratio(2001, 0.3) >= 0.0);
}

TEST_CASE("harmonic_lift_2d: boundary trace and corners") {
  for (double s : {0.5, 0.6, 0.75}) {
    const auto& c = coeffs_for(s);
    const double corner = std::pow(2.0, s - 1);
    CHECK(harmonic_lift_2d(1.0, 1.0, FracPower(s), c) == doctest::Approx(corner).epsilon(1e-14));
    CHECK(harmonic_lift_2d(-1.0, 1.0, FracPower(s), c) == doctest::Approx(corner).epsilon(1e-14));
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double t = -1.0 + 2.0 * (i + 0.5) / 200;
      const double g = std::pow(t * t + 1, s - 1);
      worst = std::max(worst, std::fabs(harmonic_lift_2d(t, 1.0, FracPower(s), c) - g));
      worst = std::max(worst, std::fabs(harmonic_lift_2d(-1.0, t, FracPower(s), c) - g));
    }
    CHECK(worst <= 1e-3);
  }
  CHECK_THROWS_AS(harmonic_lift_2d(0.0, 0.0, FracPower(0.6), coeffs_for(0.5)), DomainError);
}

TEST_CASE("harmonic_lift_2d: harmonic, symmetric, within boundary bounds") {
  const auto& c = coeffs_for(0.6);
  const auto f = [&](double x, double y) { return harmonic_lift_2d(x, y, FracPower(0.6), c); };
  CHECK(std::fabs(oracle::five_point_laplacian(f, 0.2, -0.3, 1e-3)) <= 1e-4);
  CHECK(f(0.2, -0.3) == doctest::Approx(f(-0.3, 0.2)).epsilon(1e-12));
  CHECK(f(0.2, -0.3) == doctest::Approx(f(-0.2, 0.3)).epsilon(1e-12));

  Grid1D g(41);
  const auto nodes = g.nodes();
  const auto vals = harmonic_lift_grid(nodes, nodes, c);
  const double lo = std::pow(2.0, -0.4), hi = 1.0;
  for (std::size_t iy = 0; iy < nodes.size(); ++iy) {
    for (std::size_t ix = 0; ix < nodes.size(); ++ix) {
      const double v = vals[iy * nodes.size() + ix];
      CHECK(v >= lo - 1e-3);
      CHECK(v <= hi + 1e-3);
      CHECK(v == doctest::Approx(f(nodes[ix], nodes[iy])).epsilon(1e-12));
    }
  }
}

TEST_CASE("DiracSolution1D") {
  const auto trunc = TruncationPolicy::with(10000);
  const DiracSolution1D u(FracPower(0.45), trunc);
  CHECK(u(1.0) == fundamental_constant(Dim::one, FracPower(0.45)));
  CHECK(u(-1.0) == u.lift());
  const DiracSolution1D v(FracPower(0.55), trunc);
  CHECK(std::isfinite(v(0.0)));
  CHECK(v(0.0) == doctest::Approx(2.3058857631428445965 + fundamental_constant(Dim::one, FracPower(0.55))));
  CHECK_THROWS_AS(DiracSolution1D(FracPower(0.5), trunc), UnsupportedCaseError);

  double prev = 0.0;
  for (std::int64_t n : {100, 1000, 10000, 100000}) {
    const double cur = spectral_dirac_solution_1d(0.0, FracPower(0.45), TruncationPolicy::with(n));
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("DiracSolution2D: boundary data and symmetry") {
  const auto trunc = TruncationPolicy::with(256);
  const DiracSolution2D u(FracPower(0.6), trunc, coeffs_for(0.6));
  const double a = fundamental_constant(Dim::two, FracPower(0.6));
  CHECK(u(0.0, 1.0) == doctest::Approx(a).epsilon(1e-3));
  CHECK(u(1.0, 1.0) == doctest::Approx(a * std::pow(2.0, -0.4)).epsilon(1e-12));
  CHECK(u(0.3, -1.0) == doctest::Approx(dirac_boundary_trace_2d(0.3, FracPower(0.6))).epsilon(1e-3));
  CHECK(u(0.2, 0.7) == doctest::Approx(u(0.7, 0.2)).epsilon(1e-12));
  CHECK(u.lift_scale() == a);
  CHECK_THROWS_AS(DiracSolution2D(FracPower(0.5), trunc, coeffs_for(0.6)), DomainError);
}
