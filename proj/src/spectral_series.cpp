#include "fraclap/spectral_series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"
#include "fraclap/special_fn.hpp"
#include "odd_harmonics.hpp"

namespace fraclap {
namespace {

using std::numbers::pi;
using detail::Trig;

void require_closed_interval(double x, const char* what) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + ": point " + std::to_string(x) + " outside [-1,1]");
  }
}

// (2m+1)^{-p} for m < count.
std::vector<double> odd_power_weights(std::int64_t count, double p) {
  std::vector<double> w(static_cast<std::size_t>(count));
  for (std::int64_t m = 0; m < count; ++m) {
    w[static_cast<std::size_t>(m)] = std::pow(static_cast<double>(2 * m + 1), -p);
  }
  return w;
}

double constant_rhs_prefactor(double s) { return 2.0 * std::pow(2.0 / pi, 2.0 * s + 1.0); }

}  // namespace

// ---------------------------------------------------------------------------

EigenPair1D::EigenPair1D(std::int64_t index) : k(index) {
  if (index < 1) throw DomainError("eigen index must be >= 1");
}

double EigenPair1D::lambda() const {
  const double r = static_cast<double>(k) * pi / 2.0;
  return r * r;
}

double EigenPair1D::operator()(double x) const {
  require_closed_interval(x, "eigenfunction");
  if (x == -1.0 || x == 1.0) return 0.0;
  return std::sin(static_cast<double>(k) * pi * (x + 1.0) / 2.0);
}

EigenPair2D::EigenPair2D(std::int64_t k_index, std::int64_t m_index) : k(k_index), m(m_index) {
  if (k_index < 1 || m_index < 1) throw DomainError("eigen indices must be >= 1");
}

double EigenPair2D::lambda() const {
  const double kk = static_cast<double>(k);
  const double mm = static_cast<double>(m);
  return (kk * kk + mm * mm) * pi * pi / 4.0;
}

double EigenPair2D::operator()(double x, double y) const {
  return EigenPair1D(k)(x) * EigenPair1D(m)(y);
}

// ---------------------------------------------------------------------------

ConstantRhsSeries::ConstantRhsSeries(FracPower s, TruncationPolicy trunc)
    : s_(s), trunc_(trunc) {
  trunc_.validate();
  weights_ = odd_power_weights(trunc_.max_index, 2.0 * s.value() + 1.0);
}

double ConstantRhsSeries::operator()(double x) const {
  require_closed_interval(x, "spectral_constant_rhs_1d");
  // u_s is even; measuring from the nearer endpoint keeps x + 1 exact.
  return at_boundary_distance(1.0 - std::fabs(x));
}

double ConstantRhsSeries::at_boundary_distance(double d) const {
  const double one[1] = {d};
  return evaluate_at_boundary_distances(one)[0];
}

std::vector<double> ConstantRhsSeries::evaluate(std::span<const double> xs) const {
  std::vector<double> ds(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require_closed_interval(xs[i], "spectral_constant_rhs_1d");
    ds[i] = 1.0 - std::fabs(xs[i]);
  }
  return evaluate_at_boundary_distances(ds);
}

std::vector<double> ConstantRhsSeries::evaluate_at_boundary_distances(
    std::span<const double> ds) const {
  std::vector<double> thetas(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!(ds[i] >= 0.0 && ds[i] <= 2.0)) throw DomainError("boundary distance outside [0,2]");
    // sin[(2m+1) pi (2 - d)/2] = sin[(2m+1) pi d/2], so fold d > 1 back.
    const double d = ds[i] > 1.0 ? 2.0 - ds[i] : ds[i];
    thetas[i] = pi * d / 2.0;
  }
  std::vector<double> out(ds.size());
  detail::sum_odd_harmonics(weights_, Trig::sine, thetas, trunc_.accumulation, out);
  const double pref = constant_rhs_prefactor(s_.value());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out[i] = (ds[i] == 0.0 || ds[i] == 2.0) ? 0.0 : pref * out[i];
  }
  return out;
}

double spectral_constant_rhs_1d(double x, FracPower s, const TruncationPolicy& trunc) {
  return ConstantRhsSeries(s, trunc)(x);
}

std::vector<double> fourier_coefficients_constant_rhs(FracPower s, std::int64_t count) {
  if (count < 1) throw DomainError("coefficient count must be >= 1");
  const double p = 2.0 * s.value() + 1.0;
  const double pref = constant_rhs_prefactor(s.value());
  std::vector<double> c(static_cast<std::size_t>(count), 0.0);
  for (std::int64_t k = 1; k <= count; k += 2) {
    c[static_cast<std::size_t>(k - 1)] = pref * std::pow(static_cast<double>(k), -p);
  }
  return c;
}

// ---------------------------------------------------------------------------

DiracSeries1D::DiracSeries1D(FracPower s, TruncationPolicy trunc) : s_(s), trunc_(trunc) {
  trunc_.validate();
  weights_ = odd_power_weights(trunc_.max_index, 2.0 * s.value());
}

double DiracSeries1D::operator()(double x) const {
  const double one[1] = {x};
  return evaluate(one)[0];
}

std::vector<double> DiracSeries1D::evaluate(std::span<const double> xs) const {
  std::vector<double> thetas(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require_closed_interval(xs[i], "spectral_dirac_1d");
    thetas[i] = pi * std::fabs(xs[i]) / 2.0;
  }
  std::vector<double> out(xs.size());
  detail::sum_odd_harmonics(weights_, Trig::cosine, thetas, trunc_.accumulation, out);
  const double pref = std::pow(2.0 / pi, 2.0 * s_.value());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = std::fabs(xs[i]) == 1.0 ? 0.0 : pref * out[i];
  }
  return out;
}

double spectral_dirac_1d(double x, FracPower s, const TruncationPolicy& trunc) {
  return DiracSeries1D(s, trunc)(x);
}

double spectral_dirac_1d_sine_form(double x, FracPower s, const TruncationPolicy& trunc) {
  require_closed_interval(x, "spectral_dirac_1d_sine_form");
  trunc.validate();
  if (x == -1.0 || x == 1.0) return 0.0;
  Accumulator acc(trunc.accumulation);
  for (std::int64_t m = 0; m < trunc.max_index; ++m) {
    const double odd = static_cast<double>(2 * m + 1);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    acc.add(sign * std::pow(odd, -2.0 * s.value()) * std::sin(odd * pi * (x + 1.0) / 2.0));
  }
  return std::pow(2.0 / pi, 2.0 * s.value()) * acc.value();
}

// ---------------------------------------------------------------------------

namespace {
constexpr double kKernelSwitch = 1e-6;
}

DiracSeries2D::DiracSeries2D(FracPower s, TruncationPolicy trunc)
    : s_(s), trunc_(trunc), n_(trunc.max_index) {
  trunc_.validate();
  const auto n = static_cast<std::size_t>(n_);
  weights_.assign(n * n, 0.0);
  const double pref = std::pow(2.0 / pi, 2.0 * s.value());
  for (std::size_t k = 0; k < n; ++k) {
    const double a = static_cast<double>(2 * k + 1);
    for (std::size_t m = k; m < n; ++m) {
      const double b = static_cast<double>(2 * m + 1);
      const double w = pref * std::pow(a * a + b * b, -s.value());
      weights_[k * n + m] = w;
      weights_[m * n + k] = w;
    }
  }
}

std::vector<double> DiracSeries2D::inner_sums(double y) const {
  const auto n = static_cast<std::size_t>(n_);
  const double ay = std::fabs(y);
  std::vector<double> inner(n, 0.0);
  const double sy = std::sin(pi * ay / 2.0);
  if (sy > kKernelSwitch) {
    // B_m = sum_{j<=m} cos[(2j+1) pi y/2] in closed form, then
    // sum_m w_m cos_m = sum_{m<n-1} (w_m - w_{m+1}) B_m + w_{n-1} B_{n-1}.
    std::vector<double> partial(n);
    for (std::size_t m = 0; m < n; ++m) {
      partial[m] = std::sin(static_cast<double>(m + 1) * pi * ay) / (2.0 * sy);
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double* w = &weights_[k * n];
      Accumulator acc(trunc_.accumulation);
      for (std::size_t m = 0; m + 1 < n; ++m) acc.add((w[m] - w[m + 1]) * partial[m]);
      acc.add(w[n - 1] * partial[n - 1]);
      inner[k] = acc.value();
    }
  } else {
    std::vector<double> cosines(n);
    for (std::size_t m = 0; m < n; ++m) {
      cosines[m] = std::cos(static_cast<double>(2 * m + 1) * pi * ay / 2.0);
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double* w = &weights_[k * n];
      Accumulator acc(trunc_.accumulation);
      for (std::size_t m = 0; m < n; ++m) acc.add(w[m] * cosines[m]);
      inner[k] = acc.value();
    }
  }
  return inner;
}

double DiracSeries2D::outer_sum(double x, std::span<const double> inner) const {
  const double ax = std::fabs(x);
  Accumulator acc(trunc_.accumulation);
  for (std::size_t k = 0; k < inner.size(); ++k) {
    acc.add(std::cos(static_cast<double>(2 * k + 1) * pi * ax / 2.0) * inner[k]);
  }
  return acc.value();
}

double DiracSeries2D::operator()(double x, double y) const {
  require_closed_interval(x, "spectral_dirac_2d");
  require_closed_interval(y, "spectral_dirac_2d");
  if (std::fabs(x) == 1.0 || std::fabs(y) == 1.0) return 0.0;
  return outer_sum(x, inner_sums(y));
}

std::vector<double> DiracSeries2D::evaluate_grid(std::span<const double> xs,
                                                 std::span<const double> ys) const {
  for (double x : xs) require_closed_interval(x, "spectral_dirac_2d");
  for (double y : ys) require_closed_interval(y, "spectral_dirac_2d");
  // Every term is even in y, so rows are shared between y and -y.
  std::map<double, std::vector<double>> rows;
  std::vector<double> out(xs.size() * ys.size(), 0.0);
  for (std::size_t iy = 0; iy < ys.size(); ++iy) {
    const double ay = std::fabs(ys[iy]);
    if (ay == 1.0) continue;
    auto it = rows.find(ay);
    if (it == rows.end()) it = rows.emplace(ay, inner_sums(ay)).first;
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      if (std::fabs(xs[ix]) == 1.0) continue;
      out[iy * xs.size() + ix] = outer_sum(xs[ix], it->second);
    }
  }
  return out;
}

double spectral_dirac_2d(double x, double y, FracPower s, const TruncationPolicy& trunc) {
  return DiracSeries2D(s, trunc)(x, y);
}

double dirac2d_row_block(std::int64_t k, std::int64_t p, std::int64_t P, double y, FracPower s) {
  if (k < 0 || p < 0 || P <= p) throw DomainError("row block needs k >= 0 and 0 <= p < P");
  const double a = static_cast<double>(2 * k + 1);
  CompensatedSum acc;
  for (std::int64_t m = p; m < P; ++m) {
    const double b = static_cast<double>(2 * m + 1);
    acc += std::pow(a * a + b * b, -s.value()) * std::cos(b * pi * y / 2.0);
  }
  return acc.value();
}

// ---------------------------------------------------------------------------

double dirichlet_kernel_sum(std::int64_t p, std::int64_t P, double x) {
  if (p < 0 || P <= p) throw DomainError("dirichlet_kernel_sum needs 0 <= p < P");
  const double denom = std::sin(pi * x / 2.0);
  if (std::fabs(denom) < 1e-14) {
    throw SingularityError("dirichlet_kernel_sum: sin(pi x/2) vanishes at x = " + std::to_string(x));
  }
  return (std::sin(static_cast<double>(P) * pi * x) - std::sin(static_cast<double>(p) * pi * x)) /
         (2.0 * denom);
}

double partial_sum_vN(double y, std::int64_t N) {
  if (N < 1) throw DomainError("partial_sum_vN needs N >= 1");
  std::vector<double> w = odd_power_weights(N, 2.0);
  const double theta[1] = {pi * y / 2.0};
  double out[1];
  detail::sum_odd_harmonics(w, Trig::sine, theta, Accumulation::compensated, out);
  return 8.0 / (pi * pi) * out[0];
}

double vN_second_derivative(double y, std::int64_t N) {
  if (N < 1) throw DomainError("vN_second_derivative needs N >= 1");
  const double denom = std::sin(pi * y / 2.0);
  if (y == 0.0 || std::fabs(denom) < 1e-14) {
    throw SingularityError("vN_second_derivative is singular at y = " + std::to_string(y));
  }
  return -(1.0 - std::cos(static_cast<double>(N) * pi * y)) / denom;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ProbeSeries p) {
  switch (p) {
    case ProbeSeries::w1_at_0:
      return "w1_at_0";
    case ProbeSeries::w2_at_origin:
      return "w2_at_origin";
    case ProbeSeries::vN_prime_at_0:
      return "vN_prime_at_0";
  }
  return "unknown";
}

bool GrowthReport::crossed(double threshold) const {
  for (const auto& c : crossings) {
    if (c.threshold == threshold) return c.terms.has_value();
  }
  throw DomainError("threshold was not probed");
}

namespace {

// Bookkeeping shared by the probes: decade checkpoints and threshold hits.
class ProbeRecorder {
 public:
  ProbeRecorder(GrowthReport& report, std::span<const double> thresholds) : report_(report) {
    for (double t : thresholds) report_.crossings.push_back({t, std::nullopt});
  }

  // Returns true once every threshold has been crossed.
  bool record(std::int64_t terms, double sum) {
    report_.terms_used = terms;
    report_.final_partial_sum = sum;
    if (terms >= next_checkpoint_) {
      report_.trajectory.push_back({terms, sum});
      while (next_checkpoint_ <= terms) next_checkpoint_ *= 10;
    }
    bool all = true;
    for (auto& c : report_.crossings) {
      if (!c.terms && sum > c.threshold) c.terms = terms;
      all = all && c.terms.has_value();
    }
    return all && !report_.crossings.empty();
  }

  void finish() {
    if (report_.trajectory.empty() || report_.trajectory.back().terms != report_.terms_used) {
      report_.trajectory.push_back({report_.terms_used, report_.final_partial_sum});
    }
  }

 private:
  GrowthReport& report_;
  std::int64_t next_checkpoint_ = 1;
};

void fill_decade_difference(GrowthReport& r) {
  for (const auto& p : r.trajectory) {
    if (p.terms * 10 == r.terms_used) {
      r.last_decade_difference = std::fabs(r.final_partial_sum - p.partial_sum);
      r.stabilized = *r.last_decade_difference <= kProbeStabilizationTolerance;
    }
  }
}

void probe_w1(GrowthReport& r, ProbeRecorder& rec, double s, std::int64_t budget) {
  const double pref = std::pow(2.0 / pi, 2.0 * s);
  CompensatedSum acc;
  for (std::int64_t m = 0; m < budget; ++m) {
    acc += pref * std::pow(static_cast<double>(2 * m + 1), -2.0 * s);
    if (rec.record(m + 1, acc.value())) break;
  }
  rec.finish();
  if (s > 0.5) {
    const double n = static_cast<double>(r.terms_used);
    r.tail_bound = pref * std::pow(2.0 * n - 1.0, 1.0 - 2.0 * s) / (2.0 * (2.0 * s - 1.0));
    fill_decade_difference(r);
  }
}

void probe_w2(GrowthReport& r, ProbeRecorder& rec, double s, std::int64_t budget) {
  const double pref = std::pow(2.0 / pi, 2.0 * s);
  CompensatedSum total;
  std::int64_t terms = 0;
  if (s > 0.5) {
    // Row k is sum_m [a^2 + (2m+1)^2]^{-s}, a = 2k+1. After kRowTerms explicit
    // terms the rest is at least the integral
    //   (1/2) a^{1-2s} int_c^inf (1+v^2)^{-s} dv,  c = (2 kRowTerms + 1)/a,
    // bounded below by max(G0 - c, (1 + 1/c^2)^{-s} c^{1-2s}/(2s-1)) with
    // G0 = int_0^inf (1+v^2)^{-s} dv = sqrt(pi) Gamma(s - 1/2) / (2 Gamma(s)).
    constexpr std::int64_t kRowTerms = 16;
    r.lower_bound = true;
    const double gamma_shift = gamma(s + 0.5) / (s - 0.5);
    const double g0 = std::sqrt(pi) * gamma_shift / (2.0 * gamma(s));
    for (std::int64_t k = 0; terms + kRowTerms <= budget; ++k) {
      const double a = static_cast<double>(2 * k + 1);
      CompensatedSum row;
      for (std::int64_t m = 0; m < kRowTerms; ++m) {
        const double b = static_cast<double>(2 * m + 1);
        row += std::pow(a * a + b * b, -s);
      }
      const double c = static_cast<double>(2 * kRowTerms + 1) / a;
      const double bound_small_c = g0 - c;
      const double bound_large_c =
          std::pow(1.0 + 1.0 / (c * c), -s) * std::pow(c, 1.0 - 2.0 * s) / (2.0 * s - 1.0);
      const double tail = 0.5 * std::pow(a, 1.0 - 2.0 * s) *
                          std::max({bound_small_c, bound_large_c, 0.0});
      row += tail;
      total += pref * row.value();
      terms += kRowTerms;
      if (rec.record(terms, total.value())) break;
    }
  } else {
    // Rows diverge; add square shells max(k, m) = K instead.
    for (std::int64_t shell = 0; terms + 2 * shell + 1 <= budget; ++shell) {
      const double a = static_cast<double>(2 * shell + 1);
      CompensatedSum ring;
      for (std::int64_t j = 0; j < shell; ++j) {
        const double b = static_cast<double>(2 * j + 1);
        ring += 2.0 * std::pow(a * a + b * b, -s);
      }
      ring += std::pow(2.0 * a * a, -s);
      total += pref * ring.value();
      terms += 2 * shell + 1;
      if (rec.record(terms, total.value())) break;
    }
  }
  rec.finish();
}

void probe_vN(GrowthReport&, ProbeRecorder& rec, double n_param, std::int64_t budget) {
  const auto n = std::min<std::int64_t>(static_cast<std::int64_t>(n_param), budget);
  CompensatedSum acc;
  for (std::int64_t m = 0; m < n; ++m) {
    acc += 4.0 / (pi * static_cast<double>(2 * m + 1));
    if (rec.record(m + 1, acc.value())) break;
  }
  rec.finish();
}

}  // namespace

GrowthReport divergence_probe(ProbeSeries series, double parameter,
                              std::span<const double> thresholds, std::int64_t budget) {
  if (budget < 1) throw DomainError("probe budget must be >= 1");
  GrowthReport report;
  report.series = series;
  report.parameter = parameter;
  ProbeRecorder rec(report, thresholds);
  switch (series) {
    case ProbeSeries::w1_at_0:
      probe_w1(report, rec, FracPower(parameter).value(), budget);
      break;
    case ProbeSeries::w2_at_origin:
      probe_w2(report, rec, FracPower(parameter).value(), budget);
      break;
    case ProbeSeries::vN_prime_at_0:
      if (!(parameter >= 1.0)) throw DomainError("vN probe needs N >= 1");
      probe_vN(report, rec, parameter, budget);
      break;
  }
  return report;
}

}  // namespace fraclap
