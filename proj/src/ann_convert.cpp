#include "mdl/ann_convert.hpp"

#include "mdl/circuit_builder.hpp"
#include "mdl/errors.hpp"

namespace mdl {

ann circuit_to_ann(const circuit& c, const operator_set& os) {
  c.validate();
  os.validate();
  ann a;
  a.declared_input_size = c.declared_input_size;
  for (const auto& nd : c.nodes) {
    ann_node an;
    switch (nd.kind) {
    case gate_kind::input:
      an.is_input = true;
      an.index = nd.a;
      break;
    case gate_kind::g_and:
      an.index = os.and_op;
      an.a = nd.a;
      an.b = nd.b;
      break;
    case gate_kind::g_or:
      an.index = os.or_op;
      an.a = nd.a;
      an.b = nd.b;
      break;
    case gate_kind::g_not:
      an.index = os.not_op;
      an.a = nd.a;
      break;
    }
    a.nodes.push_back(an);
  }
  a.sink = c.sink;
  a.validate(os);
  return a;
}

ann_to_circuit_result ann_to_circuit(const ann& a, const operator_set& os) {
  a.validate(os);
  const std::uint32_t d = os.width;
  if (d > 6)
    throw budget_error("ann_to_circuit: operator width above the guard");
  using wire = circuit_builder::wire;
  circuit_builder b(a.declared_input_size);

  const std::uint64_t zc = os.zero_code(), oc = os.one_code();
  // One wire per code bit, most significant first.
  std::vector<std::vector<wire>> bundle(a.nodes.size());
  for (std::uint32_t i = 0; i < a.nodes.size(); ++i) {
    const auto& nd = a.nodes[i];
    std::vector<wire>& out = bundle[i];
    out.resize(d);
    if (nd.is_input) {
      wire x = b.input(nd.index);
      for (std::uint32_t j = 0; j < d; ++j) {
        bool zbit = (zc >> (d - 1 - j)) & 1u;
        bool obit = (oc >> (d - 1 - j)) & 1u;
        if (zbit == obit)
          out[j] = wire::constant(zbit);
        else if (obit)
          out[j] = x;
        else
          out[j] = b.make_not(x);
      }
      continue;
    }
    const auto& op = os.ops[nd.index];
    std::vector<wire> args;
    if (op.arity >= 1)
      args.insert(args.end(), bundle[nd.a].begin(), bundle[nd.a].end());
    if (op.arity == 2)
      args.insert(args.end(), bundle[nd.b].begin(), bundle[nd.b].end());
    const std::uint32_t k = d * op.arity;
    // Output bit j of the operator as a truth table over the packed
    // argument bits.
    for (std::uint32_t j = 0; j < d; ++j) {
      std::vector<std::uint8_t> rows(std::size_t{1} << k);
      for (std::uint64_t v = 0; v < rows.size(); ++v) {
        std::uint64_t pa = op.arity >= 1 ? (v >> (k - d)) & os.code_mask() : 0;
        std::uint64_t pb = op.arity == 2 ? v & os.code_mask() : 0;
        std::uint64_t res = op.fn(pa, pb) & os.code_mask();
        rows[v] = (res >> (d - 1 - j)) & 1u;
      }
      out[j] = synthesize_table(b, rows, args);
    }
  }

  // Output bit: sink bundle equals the code of one.
  wire eq = wire::constant(true);
  for (std::uint32_t j = 0; j < d; ++j) {
    bool obit = (oc >> (d - 1 - j)) & 1u;
    wire w = bundle[a.sink][j];
    eq = b.make_and(eq, obit ? w : b.make_not(w));
  }

  ann_to_circuit_result res;
  res.realization = b.extract(eq);
  if (a.declared_input_size <= 12) {
    bool bot = false;
    ann_table(a, os, &bot);
    res.bottom_possible = bot;
  }
  return res;
}

} // namespace mdl
