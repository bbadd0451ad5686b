#pragma once

#include <cstdint>
#include <optional>

#include "mdl/bits.hpp"
#include "mdl/circuit.hpp"
#include "mdl/turing.hpp"

namespace mdl {

struct compilation_report {
  circuit realization;
  std::uint64_t t = 0;
  std::uint64_t rule_count = 0;
  std::uint32_t measured_size = 0;
  // size / (rules * t * log2 t), the scale a machine-size-aware
  // simulation would reach; reported, not enforced (the log term is
  // clamped to one).
  double bound_ratio = 0;
};

// Unrolls a budgeted run into a configuration tableau: per step, one
// wire per state, per head position, and per work-cell symbol, with the
// transition logic replicated between consecutive slices. The circuit
// outputs 1 exactly when the machine accepts within t steps, matching
// the reject-on-timeout reading of a budgeted run, so compiling a
// hardwired program of the time-limited interpreter realizes that
// interpreter's restriction to n-bit inputs.
//
// Requires a single input tape, n >= 2, t >= 1. Throws budget_error
// when the builder exceeds node_guard nodes.
compilation_report compile_machine(const turing_machine& m, std::uint32_t n,
                                   std::uint64_t t,
                                   std::uint64_t node_guard = 6'000'000);

struct equivalence_check {
  bool ok = true;
  std::optional<bits> counterexample;
};

// Exhaustively compares the circuit against the budgeted simulation on
// all n-bit inputs (n <= 12).
equivalence_check verify_equivalence(const turing_machine& m,
                                     const circuit& c, std::uint32_t n,
                                     std::uint64_t t);

} // namespace mdl
