#pragma once

#include <cstdint>
#include <vector>

#include "mdl/table.hpp"

namespace mdl {

// Whether the hypothesis set realizes all 2^|points| labelings of the
// given input rows. Guarded to |points| <= 20.
bool shatters(const std::vector<truth_table>& hypotheses,
              const std::vector<std::uint64_t>& points);

struct vc_demo_result {
  std::uint32_t d = 0;              // family parameter
  std::uint32_t num_points = 0;     // floor(d/2)
  std::uint32_t x_bits = 0;         // input size used
  std::uint64_t patterns_checked = 0;
  bool shattered = false;
  double measured_constant = 0;     // num_points / d
};

// Builds the indexer family {U([E(T), u], .) : u in B^(d/2)} for the
// machine returning the u-bit selected by its input, and checks that it
// shatters the first floor(d/2) index strings: exhaustively over all
// 2^(d/2) labelings when `full`, else over `sample_patterns` random
// ones. Every check drives the universal interpreter on the encoded
// program.
vc_demo_result vc_lower_bound_demo(std::uint32_t d, bool full,
                                   std::uint32_t sample_patterns,
                                   std::uint64_t seed);

} // namespace mdl
