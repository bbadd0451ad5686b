#include "mdl/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdl {

double binary_entropy(double x) {
  if (x < 0 || x > 0.5)
    throw std::invalid_argument("binary_entropy: domain is [0, 1/2]");
  if (x == 0)
    return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

bool counting_bound_check(std::uint32_t m, std::uint32_t num,
                          std::uint32_t den) {
  if (den == 0 || 2 * num > den)
    throw std::invalid_argument("counting_bound_check: eps must be in [0,1/2]");
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;

  const std::uint32_t cutoff =
      static_cast<std::uint32_t>((static_cast<std::uint64_t>(m) * num) / den);
  cpp_int lhs = 0;
  cpp_int binom = 1;
  for (std::uint32_t i = 0; i <= cutoff; ++i) {
    lhs += binom;
    binom = binom * (m - i) / (i + 1);
  }

  // lhs <= 2^(m H(num/den))  <=>  lhs^den * (num^num (den-num)^(den-num))^m
  //                               <= den^(den m)
  // with 0^0 = 1 covering eps = 0.
  cpp_int lhs_pow = pow(lhs, den);
  cpp_int base = 1;
  if (num > 0)
    base *= pow(cpp_int(num), num);
  if (den - num > 0)
    base *= pow(cpp_int(den - num), den - num);
  cpp_int left = lhs_pow * pow(base, m);
  cpp_int right = pow(cpp_int(den), den * m);
  return left <= right;
}

} // namespace mdl
