#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mdl/circuit.hpp"

namespace mdl {

// Incremental circuit construction with structural hashing and constant
// folding. Wires are either literal constants or node references;
// constants never materialize as nodes, so extraction always yields a
// well-formed circuit (constants at the sink fall back to the 3-node
// x0-based realization).
class circuit_builder {
public:
  struct wire {
    enum class tag : std::uint8_t { constant, node } t = tag::constant;
    bool cval = false;
    std::uint32_t id = 0;

    static wire constant(bool v) { return {tag::constant, v, 0}; }
    bool is_constant() const { return t == tag::constant; }
    bool is_true() const { return is_constant() && cval; }
    bool is_false() const { return is_constant() && !cval; }
  };

  explicit circuit_builder(std::uint32_t input_size) : n_(input_size) {}

  wire input(std::uint32_t var);
  wire make_and(wire a, wire b);
  wire make_or(wire a, wire b);
  wire make_not(wire a);

  wire make_xor(wire a, wire b) {
    return make_or(make_and(a, make_not(b)), make_and(make_not(a), b));
  }
  // if s then a else b
  wire make_mux(wire s, wire a, wire b) {
    return make_or(make_and(s, a), make_and(make_not(s), b));
  }

  std::size_t node_count() const { return nodes_.size(); }

  // Extracts the cone of `out` as a circuit with the sink last,
  // reindexed topologically. Unreferenced nodes are dropped.
  circuit extract(wire out) const;

private:
  wire add_node(gate_kind kind, std::uint32_t a, std::uint32_t b);

  std::uint32_t n_;
  std::vector<circuit_node> nodes_;
  std::unordered_map<std::uint64_t, std::uint32_t> cache_;
};

// Realizes an arbitrary truth table (rows[i] for argument assignment i,
// first argument = most significant index bit) over the given argument
// wires by recursive cofactor expansion with subfunction sharing.
circuit_builder::wire
synthesize_table(circuit_builder& b, const std::vector<std::uint8_t>& rows,
                 const std::vector<circuit_builder::wire>& args);

} // namespace mdl
