#pragma once

#include <cstdint>
#include <optional>

#include "mdl/dataset.hpp"
#include "mdl/interpreter.hpp"
#include "mdl/table.hpp"

namespace mdl {

// How the candidate program space is walked. All modes return the
// shortest consistent total program of their space, ties broken toward
// the lexicographically first.
//
// raw_bitstring: every bit string in (length, lex) order (circuit
//   programs via the decodable-prefix walk, which is the same order
//   restricted to strings that can possibly qualify).
// structured_circuit: minimal canonical circuits per truth table up to
//   a vertex cap, ordered by encoded length; optionally falls back to
//   the sample-consistent tree circuit when the cap is too small.
// program_pool: the registered machine program library.
enum class search_mode : std::uint8_t {
  raw_bitstring,
  structured_circuit,
  program_pool
};

struct learn_limits {
  std::uint64_t search_cap = 64;  // raw mode: max program bit length
  std::uint32_t vertex_cap = 8;   // structured mode
  std::uint64_t max_candidates = 100'000'000;
  bool tree_fallback = false;
};

struct mdl_result {
  bits program;
  std::uint64_t length = 0;
  truth_table hypothesis;
  search_mode mode = search_mode::raw_bitstring;
  bool from_fallback = false;
};

bool is_consistent(const interpreter& interp, const bits& program,
                   const dataset& d);
bool is_total(const interpreter& interp, const bits& program,
              std::uint32_t n);

// Shortest program consistent with the dataset and total on n-bit
// inputs. Throws inconsistent_dataset_error for contradictory data and
// search_exhausted_error when the space holds no qualifying program.
mdl_result mdl_learn(const interpreter& interp, const dataset& d,
                     std::uint32_t n, search_mode mode,
                     const learn_limits& lim = {});

} // namespace mdl
