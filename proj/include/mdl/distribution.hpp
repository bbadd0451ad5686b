#pragma once

#include <cstdint>
#include <vector>

#include "mdl/table.hpp"

namespace mdl {

// Probability measure on n-bit inputs. Uniform and sparse-support
// masses are dyadic, so accuracies computed against them are exact in
// double arithmetic.
struct distribution {
  enum class kind : std::uint8_t { uniform, sparse_support, explicit_table };

  kind k = kind::uniform;
  std::uint32_t n = 0;
  // sparse_support: uniform over inputs whose last n - prefix_bits bits
  // are zero.
  std::uint32_t prefix_bits = 0;
  // explicit_table: one mass per row index.
  std::vector<double> masses;

  static distribution uniform(std::uint32_t n) {
    return {kind::uniform, n, 0, {}};
  }
  static distribution sparse(std::uint32_t n, std::uint32_t prefix_bits);
  static distribution explicit_masses(std::uint32_t n,
                                      std::vector<double> masses);

  // Throws std::invalid_argument on negative masses or a total off
  // from one by more than 2^-40.
  void validate() const;

  double mass(std::uint64_t row) const;
  bool in_support(std::uint64_t row) const;
};

// Exact accuracy: the probability mass of inputs where the hypothesis
// agrees with the target.
double accuracy(const truth_table& hypothesis, const truth_table& target,
                const distribution& d);

} // namespace mdl
