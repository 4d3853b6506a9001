#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "fraclap/summation.hpp"

namespace fraclap::detail {

enum class Trig { sine, cosine };

// out[i] = sum_{m < weights.size()} weights[m] * trig((2m+1) * thetas[i]).
//
// The angles (2m+1)theta are advanced by a rotation through 2theta and
// re-seeded from std::sin/std::cos every kReseedInterval terms, which bounds
// the recurrence drift to a few dozen ulps. Points are processed in chunks
// with the index loop outermost so every point sees the same term order.
void sum_odd_harmonics(std::span<const double> weights, Trig trig,
                       std::span<const double> thetas, Accumulation accumulation,
                       std::span<double> out);

inline constexpr std::int64_t kReseedInterval = 64;

}  // namespace fraclap::detail
