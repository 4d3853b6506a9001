#pragma once

#include "fraclap/frac_power.hpp"

namespace fraclap {

/// Spatial dimension of the model problems.
enum class Dim : int { one = 1, two = 2 };

inline int as_int(Dim n) { return static_cast<int>(n); }
Dim dim_from_int(int n);

/// Gamma function for real x in [0.05, 171], via a Lanczos approximation
/// (Godfrey's g = 607/128 set). Relative error is below 1e-13 on that range.
/// Throws DomainError outside it; the approximation is not trusted below 0.05.
double gamma(double x);

/// c(n,s) = 2^{-2s} Gamma(n/2) / (Gamma((n+2s)/2) Gamma(1+s)), the constant
/// of the unit-ball solution c(n,s)(1 - |x|^2)^s for right-hand side 1.
double riesz_ball_constant(Dim n, FracPower s);

/// a(n,s) = Gamma(n/2 - s) / (2^{2s} pi^{n/2} Gamma(s)), the constant of the
/// fundamental solution a(n,s)|x|^{2s-n}. Negative for n = 1, s > 1/2.
/// Throws UnsupportedCaseError for |2s - n| < 1e-9 (logarithmic case).
double fundamental_constant(Dim n, FracPower s);

inline constexpr double kLogCaseTolerance = 1e-9;

bool is_log_case(Dim n, FracPower s);

}  // namespace fraclap
