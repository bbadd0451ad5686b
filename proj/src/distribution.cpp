#include "mdl/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace mdl {

distribution distribution::sparse(std::uint32_t n,
                                  std::uint32_t prefix_bits) {
  if (prefix_bits > n)
    throw std::invalid_argument("distribution: prefix wider than input");
  return {kind::sparse_support, n, prefix_bits, {}};
}

distribution distribution::explicit_masses(std::uint32_t n,
                                           std::vector<double> masses) {
  distribution d{kind::explicit_table, n, 0, std::move(masses)};
  d.validate();
  return d;
}

void distribution::validate() const {
  if (k != kind::explicit_table)
    return;
  if (masses.size() != (std::size_t{1} << n))
    throw std::invalid_argument("distribution: needs one mass per input");
  double total = 0;
  for (double m : masses) {
    if (m < 0)
      throw std::invalid_argument("distribution: negative mass");
    total += m;
  }
  if (std::abs(total - 1.0) > std::ldexp(1.0, -40))
    throw std::invalid_argument("distribution: masses must sum to one");
}

double distribution::mass(std::uint64_t row) const {
  switch (k) {
  case kind::uniform:
    return std::ldexp(1.0, -static_cast<int>(n));
  case kind::sparse_support:
    return in_support(row) ? std::ldexp(1.0, -static_cast<int>(prefix_bits))
                           : 0.0;
  default:
    return masses[row];
  }
}

bool distribution::in_support(std::uint64_t row) const {
  switch (k) {
  case kind::uniform:
    return true;
  case kind::sparse_support: {
    const std::uint32_t tail = n - prefix_bits;
    const std::uint64_t tail_mask = (std::uint64_t{1} << tail) - 1;
    return (row & tail_mask) == 0;
  }
  default:
    return masses[row] > 0;
  }
}

double accuracy(const truth_table& hypothesis, const truth_table& target,
                const distribution& d) {
  if (hypothesis.inputs() != target.inputs() || d.n != target.inputs())
    throw std::invalid_argument("accuracy: size mismatch");
  switch (d.k) {
  case distribution::kind::uniform:
    // Dyadic, hence exact.
    return std::ldexp(static_cast<double>(hypothesis.agreement_count(target)),
                      -static_cast<int>(d.n));
  case distribution::kind::sparse_support: {
    std::uint64_t agree = 0;
    const std::uint64_t support = std::uint64_t{1} << d.prefix_bits;
    const std::uint32_t tail = d.n - d.prefix_bits;
    for (std::uint64_t p = 0; p < support; ++p) {
      std::uint64_t row = p << tail;
      agree += hypothesis.get(row) == target.get(row);
    }
    return std::ldexp(static_cast<double>(agree),
                      -static_cast<int>(d.prefix_bits));
  }
  default: {
    double acc = 0;
    for (std::uint64_t x = 0; x < target.rows(); ++x)
      if (hypothesis.get(x) == target.get(x))
        acc += d.masses[x];
    return acc;
  }
  }
}

} // namespace mdl
