#include "odd_harmonics.hpp"

#include <algorithm>
#include <array>
#include <type_traits>

namespace fraclap::detail {
namespace {

constexpr std::size_t kChunk = 64;

template <Trig kTrig, typename Acc>
void sum_chunk(std::span<const double> weights, std::span<const double> thetas,
               std::span<double> out) {
  const std::size_t n = thetas.size();
  std::array<double, kChunk> c{}, s{}, rc{}, rs{};
  std::array<Acc, kChunk> acc{};
  for (std::size_t i = 0; i < n; ++i) {
    rc[i] = std::cos(2.0 * thetas[i]);
    rs[i] = std::sin(2.0 * thetas[i]);
  }
  const auto count = static_cast<std::int64_t>(weights.size());
  for (std::int64_t m = 0; m < count; ++m) {
    if (m % kReseedInterval == 0) {
      const double odd = static_cast<double>(2 * m + 1);
      for (std::size_t i = 0; i < n; ++i) {
        const double angle = odd * thetas[i];
        c[i] = std::cos(angle);
        s[i] = std::sin(angle);
      }
    }
    const double w = weights[static_cast<std::size_t>(m)];
    for (std::size_t i = 0; i < n; ++i) {
      const double v = kTrig == Trig::sine ? s[i] : c[i];
      acc[i] += w * v;
      const double cn = c[i] * rc[i] - s[i] * rs[i];
      const double sn = s[i] * rc[i] + c[i] * rs[i];
      c[i] = cn;
      s[i] = sn;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<Acc, double>) {
      out[i] = acc[i];
    } else {
      out[i] = acc[i].value();
    }
  }
}

template <Trig kTrig>
void dispatch(std::span<const double> weights, std::span<const double> thetas,
              Accumulation accumulation, std::span<double> out) {
  for (std::size_t start = 0; start < thetas.size(); start += kChunk) {
    const std::size_t len = std::min(kChunk, thetas.size() - start);
    if (accumulation == Accumulation::compensated) {
      sum_chunk<kTrig, CompensatedSum>(weights, thetas.subspan(start, len), out.subspan(start, len));
    } else {
      sum_chunk<kTrig, double>(weights, thetas.subspan(start, len), out.subspan(start, len));
    }
  }
}

}  // namespace

void sum_odd_harmonics(std::span<const double> weights, Trig trig,
                       std::span<const double> thetas, Accumulation accumulation,
                       std::span<double> out) {
  if (trig == Trig::sine) {
    dispatch<Trig::sine>(weights, thetas, accumulation, out);
  } else {
    dispatch<Trig::cosine>(weights, thetas, accumulation, out);
  }
}

}  // namespace fraclap::detail
