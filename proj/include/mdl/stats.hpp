#pragma once

#include <cmath>
#include <cstdint>

namespace mdl {

struct interval {
  double low = 0;
  double high = 1;
};

// Wilson score interval for a binomial proportion.
inline interval wilson_interval(std::uint64_t successes,
                                std::uint64_t trials, double z) {
  if (trials == 0)
    return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

inline double wilson_half_width(std::uint64_t successes,
                                std::uint64_t trials, double z) {
  auto iv = wilson_interval(successes, trials, z);
  return (iv.high - iv.low) / 2;
}

constexpr double kZ95 = 1.959963984540054;
constexpr double kZ99 = 2.5758293035489004;

} // namespace mdl
