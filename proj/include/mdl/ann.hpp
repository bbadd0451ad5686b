#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdl/bits.hpp"
#include "mdl/table.hpp"
#include "mdl/trit.hpp"

namespace mdl {

struct ann_operator {
  std::string name;
  std::uint8_t arity = 0; // 0, 1, or 2
  // Semantic function over d-bit codes (low d bits used).
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> fn;
};

// A fixed finite family of d-bit operators with distinguished Boolean
// codes. Registration verifies that and/or/not act correctly on the
// Boolean codes through single operators, which also pins the gadgets
// used by the circuit conversion.
struct operator_set {
  std::string name;
  std::uint32_t width = 0; // d
  std::vector<ann_operator> ops;
  std::uint32_t zero_op = 0, one_op = 0; // 0-ary constants
  std::uint32_t and_op = 0, or_op = 0, not_op = 0;

  std::uint64_t zero_code() const { return ops[zero_op].fn(0, 0); }
  std::uint64_t one_code() const { return ops[one_op].fn(0, 0); }
  std::uint64_t code_mask() const {
    return width >= 64 ? ~std::uint64_t{0}
                       : (std::uint64_t{1} << width) - 1;
  }

  // Throws std::invalid_argument when the Boolean gadget check fails.
  void validate() const;
};

// Sign-magnitude fixed-point codes with operators
// {0, 1, max, min, 1-x, saturating +, x}. Width >= 2.
operator_set fixed_point_opset(std::uint32_t width);

// Named registry used by experiment configs: fixed2, fixed4, fixed8.
const operator_set& opset_by_name(const std::string& name);

struct ann_node {
  bool is_input = false;
  std::uint32_t index = 0; // variable index or operator id
  std::uint32_t a = 0, b = 0; // parents for arity 1/2

  bool operator==(const ann_node&) const = default;
};

// Single-sink DAG of operator applications.
struct ann {
  std::uint32_t declared_input_size = 0;
  std::vector<ann_node> nodes;
  std::uint32_t sink = 0;

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(nodes.size());
  }
  bool operator==(const ann&) const = default;
  void validate(const operator_set& os) const;
};

// Forward pass: inputs map to the Boolean codes, the sink code maps
// back to a bit, anything else is bottom.
trit eval_ann(const ann& a, const operator_set& os, const bits& x);

truth_table ann_table(const ann& a, const operator_set& os,
                      bool* bottom_seen = nullptr);

// Binary code mirroring the circuit layout with per-node label width
// ceil(log2(|O|+1)) (code |O| marks an input node) and payload width
// max(2*ceil(log2 |A|), ceil(log2 n)).
inline std::uint64_t ann_encoding_length(std::uint32_t n, std::uint64_t size,
                                         std::uint64_t num_ops) {
  const std::uint64_t w =
      std::max<std::uint64_t>(2 * ceil_log2(size), ceil_log2(n));
  return 2 * ceil_log2(n) + 2 + size * (1 + ceil_log2(num_ops + 1) + w);
}

bits encode_ann(const ann& a, const operator_set& os);
std::optional<ann> decode_ann(const bits& code, const operator_set& os);

// Text format: "INPUTS <n>", then node lines
//   <id> INPUT <var> | <id> OP <op-id> [<a> [<b>]]
// and a final "OUTPUT <id>".
std::string ann_to_text(const ann& a);
ann ann_from_text(const std::string& text, const operator_set& os);

} // namespace mdl
