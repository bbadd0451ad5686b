#pragma once

#include <cstdint>
#include <optional>

#include "mdl/bits.hpp"
#include "mdl/circuit.hpp"

namespace mdl {

// Binary circuit code:
//
//   0^d 1 [n-1 in d digits] 0^|C| 1 [record_1 ... record_|C|]
//
// with d = ceil(log2 n) and one (2 + W)-bit record per node,
// W = max(2*ceil(log2 |C|), ceil(log2 n)). The record is a 2-bit label
// (00 input, 01 and, 10 or, 11 not) followed by the payload left-packed
// into W bits: the variable index for inputs, two ceil(log2 |C|)-bit
// parent ids for and/or, one for not; spare payload bits are zero.
//
// n-1 rather than n is stored so the value fits d digits; n >= 2 is
// required since n = 1 would make the header width zero.

inline std::uint64_t circuit_encoding_length(std::uint32_t n,
                                             std::uint64_t size) {
  const std::uint64_t w =
      std::max<std::uint64_t>(2 * ceil_log2(size), ceil_log2(n));
  return 2 * ceil_log2(n) + 2 + size * (3 + w);
}

bits encode_circuit(const circuit& c);

// Accepts exactly one whole encoding (no trailing bits). Returns
// nullopt on any malformed form: bad header, forward reference,
// out-of-range variable, nonzero spare payload bits, or a childless
// node besides one sink.
std::optional<circuit> decode_circuit(const bits& code);

} // namespace mdl
