#include "fraclap/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fraclap/errors.hpp"
#include "fraclap/riesz.hpp"
#include "fraclap/special_fn.hpp"
#include "fraclap/spectral_series.hpp"

namespace fraclap {
namespace {

std::string format_exponent(double e) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", e);
  return buf;
}

RatioRow make_row(FracPower s, RatioModel model, std::string label, JRange j, double h,
                  std::vector<double> ratios) {
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  return RatioRow{s, model, std::move(label), j, h, *lo, *hi, std::move(ratios)};
}

}  // namespace

void JRange::validate() const {
  if (first < 1 || last < first) throw DomainError("j range must satisfy 1 <= first <= last");
}

std::string_view to_string(RatioModel m) {
  switch (m) {
    case RatioModel::riesz:
      return "riesz";
    case RatioModel::spectral:
      return "spectral";
    case RatioModel::spectral_log:
      return "spectral_log";
  }
  return "unknown";
}

std::vector<RatioRow> boundary_ratio_table(std::span<const FracPower> s_list, double h,
                                           JRange j_range, const TruncationPolicy& trunc,
                                           double log_exponent) {
  j_range.validate();
  if (!(h > 0.0)) throw DomainError("grid step h must be positive");
  if (!(static_cast<double>(j_range.last) * h < 2.0)) {
    throw DomainError("j h must stay inside (0,2)");
  }
  std::vector<double> dists;
  for (std::int64_t j = j_range.first; j <= j_range.last; ++j) {
    dists.push_back(static_cast<double>(j) * h);
  }

  std::vector<RatioRow> rows;
  for (const FracPower s : s_list) {
    const double sv = s.value();
    const RieszBallSolution riesz(Dim::one, s);
    const ConstantRhsSeries spectral(s, trunc);
    const auto u = spectral.evaluate_at_boundary_distances(dists);

    std::vector<double> r_riesz, r_spec;
    const double spec_exp = std::min(2.0 * sv, 1.0);
    for (std::size_t i = 0; i < dists.size(); ++i) {
      const double d = dists[i];
      r_riesz.push_back(riesz(-1.0 + d) / std::pow(d, sv));
      r_spec.push_back(u[i] / std::pow(d, spec_exp));
    }
    rows.push_back(make_row(s, RatioModel::riesz, "dist^" + format_exponent(sv), j_range, h,
                            std::move(r_riesz)));
    rows.push_back(make_row(s, RatioModel::spectral, "dist^" + format_exponent(spec_exp),
                            j_range, h, std::move(r_spec)));
    if (s.is_half()) {
      std::vector<double> r_log;
      for (std::size_t i = 0; i < dists.size(); ++i) {
        const double d = dists[i];
        r_log.push_back(u[i] / (d * std::pow(std::fabs(std::log(d)), log_exponent)));
      }
      rows.push_back(make_row(s, RatioModel::spectral_log,
                              "dist*|ln dist|^" + format_exponent(log_exponent), j_range, h,
                              std::move(r_log)));
    }
  }
  return rows;
}

double ExponentEstimate::median() const {
  if (k_values.empty()) throw DomainError("empty exponent estimate");
  std::vector<double> v = k_values;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ExponentEstimate log_exponent_estimate(double h, JRange j_range, const TruncationPolicy& trunc) {
  j_range.validate();
  if (!(h > 0.0)) throw DomainError("grid step h must be positive");
  std::vector<double> dists;
  for (std::int64_t j = j_range.first; j <= j_range.last; ++j) {
    const double d = static_cast<double>(j) * h;
    if (!(std::fabs(std::log(d)) > 1.0)) {
      throw DomainError("log exponent estimate needs |ln(j h)| > 1 for every j");
    }
    dists.push_back(d);
  }
  const ConstantRhsSeries series(FracPower(0.5), trunc);
  const auto u = series.evaluate_at_boundary_distances(dists);
  ExponentEstimate est{h, j_range, {}, trunc};
  for (std::size_t i = 0; i < dists.size(); ++i) {
    est.k_values.push_back(std::log(u[i] / dists[i]) / std::log(std::fabs(std::log(dists[i]))));
  }
  return est;
}

std::vector<MaxValuePoint> max_value_curves(std::span<const FracPower> s_grid,
                                            const TruncationPolicy& trunc) {
  std::vector<MaxValuePoint> out;
  out.reserve(s_grid.size());
  for (const FracPower s : s_grid) {
    const double riesz = s.is_classical() ? 0.5 : riesz_ball_constant(Dim::one, s);
    out.push_back({s.value(), riesz, ConstantRhsSeries(s, trunc)(0.0)});
  }
  return out;
}

}  // namespace fraclap
