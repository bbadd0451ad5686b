#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mdl/bits.hpp"
#include "mdl/table.hpp"

namespace mdl {

// Gate labels; values match the 2-bit codes of the binary format.
enum class gate_kind : std::uint8_t {
  input = 0,
  g_and = 1,
  g_or = 2,
  g_not = 3
};

struct circuit_node {
  gate_kind kind = gate_kind::input;
  std::uint32_t a = 0; // variable index for inputs, first parent otherwise
  std::uint32_t b = 0; // second parent for and/or

  bool operator==(const circuit_node&) const = default;
};

// Single-sink DAG over AND/OR/NOT and input sources, nodes in
// topological order (parents precede children).
struct circuit {
  std::uint32_t declared_input_size = 0;
  std::vector<circuit_node> nodes;
  std::uint32_t sink = 0;

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(nodes.size());
  }

  bool operator==(const circuit&) const = default;

  // Throws std::invalid_argument on a broken invariant: parent refers
  // forward, input variable out of range, or childless nodes besides
  // the sink.
  void validate() const;
};

// Value at the sink after one forward pass. Throws on length mismatch.
bool eval_circuit(const circuit& c, const bits& x);

// Full truth table over the declared input size (bit-parallel pass).
truth_table circuit_table(const circuit& c);

// Single-variable wire circuits and friends used as building blocks.
circuit wire_circuit(std::uint32_t n, std::uint32_t var);
circuit constant_circuit(std::uint32_t n, bool value);

// Text format: optional "INPUTS <n>" header, one node per line
//   <id> INPUT <var> | <id> AND <a> <b> | <id> OR <a> <b> | <id> NOT <a>
// and a final "OUTPUT <id>". Without the header the input size is
// inferred as max variable index + 1.
std::string circuit_to_text(const circuit& c);
circuit circuit_from_text(std::istream& in);
circuit circuit_from_text(const std::string& text);

} // namespace mdl
