#pragma once

#include <cstdint>
#include <optional>

#include "mdl/bits.hpp"
#include "mdl/turing.hpp"

namespace mdl {

// Prefix-free binary code for machines:
//
//   0^s 1 0^r 1 [tuple_1 ... tuple_r]
//
// with s = ceil(log2(num_states + 5)) and one s-bit field per tuple
// element. Each rule contributes the fields
//   source, k1+k2 read symbols, target, k1 input moves, k2 work actions.
// Field codes 0..num_states-1 name states (0 = initial, 1 = accept,
// 2 = reject); the five codes at the top of the s-bit space name
// 0, 1, b, L, R in that order, so a decoder needs only s to place the
// state/symbol boundary.

inline std::uint64_t machine_fields_per_rule(std::uint32_t k1,
                                             std::uint32_t k2) {
  return 2 + 2ull * k1 + 2ull * k2;
}

inline std::uint64_t machine_encoding_length(std::uint32_t num_states,
                                             std::uint64_t num_rules,
                                             std::uint32_t k1,
                                             std::uint32_t k2) {
  const unsigned s = ceil_log2(num_states + 5ull);
  return s + 1 + num_rules + 1 +
         num_rules * s * machine_fields_per_rule(k1, k2);
}

// Requires canonical state ids (use canonicalize_states first if needed)
// and at least 3 states so the three distinguished codes are distinct.
bits encode_machine(const turing_machine& m);

struct decoded_machine {
  turing_machine machine;
  std::size_t bits_consumed = 0;
};

// Parses exactly the encoding prefix of `code`; trailing bits are left
// untouched. Returns nullopt on any malformed layout, out-of-range
// field, rule keyed on a final state, or duplicate rule key.
std::optional<decoded_machine> decode_machine(const bits& code,
                                              std::uint32_t k1,
                                              std::uint32_t k2);

// Relabels states so that initial=0, accept=1, reject=2 and the
// remaining states keep their relative order. The result computes the
// same function in the same number of steps. Requires the three
// distinguished states to be pairwise distinct.
turing_machine canonicalize_states(const turing_machine& m);

} // namespace mdl
