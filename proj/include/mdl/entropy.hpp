#pragma once

#include <cstdint>

namespace mdl {

// Binary entropy on [0, 1/2], with H(0) = 0.
double binary_entropy(double x);

// Exact check of sum_{i <= floor(eps M)} C(M, i) <= 2^(M H(eps)) for
// rational eps = num/den, via the equivalent integer inequality
//   LHS^den * (num^num (den-num)^(den-num))^M <= den^(den M).
bool counting_bound_check(std::uint32_t m, std::uint32_t num,
                          std::uint32_t den);

} // namespace mdl
