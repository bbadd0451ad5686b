#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <functional>

#include "mdl/ann.hpp"
#include "mdl/circuit.hpp"
#include "mdl/bits.hpp"
#include "mdl/table.hpp"
#include "mdl/trit.hpp"

namespace mdl {

// A deterministic partial function (program, input) -> {0, 1, bottom}.
//
// universal: splits the program into a prefix-free two-input-tape
//   machine code and a payload, runs the machine on (payload, input)
//   for at most hard_cap steps; every failure folds into bottom.
// poly: same split, but the budget is ceil(beta * n^c) simulated steps
//   of the decoded machine (n = input length) and running out of budget
//   rejects, so only a decode failure yields bottom.
// circuit / ann: the program is one whole encoding; a declared input
//   size different from the actual input length is a form error.
struct interpreter {
  enum class kind : std::uint8_t { universal, poly, circuit, ann };

  kind k = kind::circuit;
  std::uint64_t hard_cap = 1'000'000;
  std::uint32_t c = 2;
  double beta = 1.0;
  std::uint32_t work_tapes = 1; // decoded machines' work tape count
  const operator_set* opset = nullptr;

  static interpreter universal(std::uint64_t hard_cap = 1'000'000) {
    interpreter i;
    i.k = kind::universal;
    i.hard_cap = hard_cap;
    return i;
  }
  static interpreter poly(std::uint32_t c, double beta = 1.0) {
    interpreter i;
    i.k = kind::poly;
    i.c = c;
    i.beta = beta;
    return i;
  }
  static interpreter circuit_interp() { return {}; }
  static interpreter ann_interp(const operator_set& os) {
    interpreter i;
    i.k = kind::ann;
    i.opset = &os;
    return i;
  }

  std::string name() const;
  std::uint64_t poly_budget(std::uint64_t input_len) const;
};

trit interpret(const interpreter& interp, const bits& program,
               const bits& input);

// Evaluates the program on every n-bit input; nullopt when any point
// yields bottom (the program is not total on that input size).
std::optional<truth_table> interpret_table(const interpreter& interp,
                                           const bits& program,
                                           std::uint32_t n);

struct description_length {
  // Empty = +infinity: no total consistent program in the search space.
  std::optional<std::uint64_t> value;
  std::optional<bits> witness;
  bool exact = false; // full exploration up to the cap vs upper bound

  bool infinite() const { return !value.has_value(); }
};

struct search_limits {
  std::uint64_t search_cap = 64;
  // Interpretation-count guard for blind enumeration; exceeding it
  // raises budget_error rather than silently weakening the answer.
  std::uint64_t max_candidates = 20'000'000;
  bool allow_upper_bound = false;
  std::uint32_t max_inputs = 12; // 2^n evaluations per candidate
};

// Shortest program whose interpretation equals `target` everywhere,
// by exhaustive (length, lexicographic) enumeration up to the cap.
// For the poly interpreter the cap is first clamped to the step budget,
// past which every total program has an equivalent shorter one.
// For the circuit interpreter enumeration walks the decodable-prefix
// tree, which visits exactly the bitstrings any other string of the
// same length would fail to decode.
description_length min_description_length(const interpreter& interp,
                                          const truth_table& target,
                                          const search_limits& lim);

// Decodable circuit encodings of exactly `size` nodes over n inputs in
// encoded lexicographic order (the raw-bitstring search order). The
// step counter is shared across calls and checked against the guard.
void for_each_decodable_circuit(
    std::uint32_t n, std::uint32_t size, std::uint64_t* steps,
    std::uint64_t step_guard,
    const std::function<bool(const circuit&, std::uint64_t)>& visit);

} // namespace mdl
