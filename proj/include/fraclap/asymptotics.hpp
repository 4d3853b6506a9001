#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fraclap/frac_power.hpp"
#include "fraclap/summation.hpp"

namespace fraclap {

/// Inclusive index range first..last, first >= 1.
struct JRange {
  std::int64_t first = 1;
  std::int64_t last = 20;

  void validate() const;
  std::int64_t size() const { return last - first + 1; }
};

enum class RatioModel {
  riesz,         // u^R(-1 + jh) / (jh)^s
  spectral,      // u_s(-1 + jh) / (jh)^{min(2s,1)}
  spectral_log,  // u_{1/2}(-1 + jh) / (jh |ln jh|^k), s = 1/2 only
};

std::string_view to_string(RatioModel m);

/// Exponent of |ln dist| used for the s = 1/2 column of the ratio table.
/// The published column values are reproduced with 0.82; the exponent is
/// a parameter so the table can be recomputed for any k.
inline constexpr double kTableLogExponent = 0.82;

/// One row of the boundary-layer ratio table.
struct RatioRow {
  FracPower s;
  RatioModel model;
  std::string exponent_model;  // human-readable, e.g. "dist^0.5"
  JRange j_range;
  double h;
  double min;
  double max;
  std::vector<double> ratios;  // ratios[j - first]
};

/// Ratios at x = -1 + j h, j in j_range, for every s: one riesz and one
/// spectral row per s, plus a spectral_log row when s = 1/2.
std::vector<RatioRow> boundary_ratio_table(std::span<const FracPower> s_list, double h,
                                           JRange j_range, const TruncationPolicy& trunc,
                                           double log_exponent = kTableLogExponent);

/// Raw estimates k_j = ln(u_{1/2}(x_j)/(x_j + 1)) / ln|ln(x_j + 1)|, x_j = -1 + j h,
/// under the model u_{1/2}(x) ~ (x+1)|ln(x+1)|^k.
struct ExponentEstimate {
  double h;
  JRange j_range;
  std::vector<double> k_values;
  TruncationPolicy truncation;

  /// Headline value: the median of k_values.
  double median() const;
};

/// Requires |ln(j h)| > 1 for every j in range.
ExponentEstimate log_exponent_estimate(double h, JRange j_range, const TruncationPolicy& trunc);

struct MaxValuePoint {
  double s;
  double riesz;     // u^R_s(0) = c(1,s)
  double spectral;  // u_s(0)
};

/// Values at x = 0 of both f = 1 solutions, one point per s. The classical
/// limit s = 1 is accepted and gives 1/2 in both columns.
std::vector<MaxValuePoint> max_value_curves(std::span<const FracPower> s_grid,
                                            const TruncationPolicy& trunc);

}  // namespace fraclap
