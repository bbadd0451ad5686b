#pragma once

#include "mdl/ann.hpp"
#include "mdl/circuit.hpp"

namespace mdl {

// Gate-for-node translation using the operator set's Boolean gadgets;
// the result agrees with the circuit on every input and has at most
// one operator node per circuit node.
ann circuit_to_ann(const circuit& c, const operator_set& os);

struct ann_to_circuit_result {
  circuit realization;
  // True when some input makes the source network produce a non-Boolean
  // sink code; the circuit outputs 0 there (circuits cannot express
  // bottom). Computed exhaustively for n <= 12, otherwise unset.
  std::optional<bool> bottom_possible;
};

// Bit-blasted translation: every node becomes a bundle of d wires and
// each operator's output bits are synthesized from its 2d-input truth
// table. Guarded to operator widths d <= 6.
ann_to_circuit_result ann_to_circuit(const ann& a, const operator_set& os);

} // namespace mdl
