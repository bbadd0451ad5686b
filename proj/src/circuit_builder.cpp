#include "mdl/circuit_builder.hpp"

#include <algorithm>
#include <string>
#include <stdexcept>

namespace mdl {

namespace {

std::uint64_t key_of(gate_kind kind, std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(kind) << 62) |
         (static_cast<std::uint64_t>(a) << 31) | b;
}

} // namespace

circuit_builder::wire circuit_builder::add_node(gate_kind kind,
                                                std::uint32_t a,
                                                std::uint32_t b) {
  std::uint64_t key = key_of(kind, a, b);
  auto it = cache_.find(key);
  if (it != cache_.end())
    return {wire::tag::node, false, it->second};
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({kind, a, b});
  cache_.emplace(key, id);
  return {wire::tag::node, false, id};
}

circuit_builder::wire circuit_builder::input(std::uint32_t var) {
  if (var >= n_)
    throw std::invalid_argument("circuit_builder: variable out of range");
  return add_node(gate_kind::input, var, 0);
}

namespace {

bool complements(const std::vector<circuit_node>& nodes, std::uint32_t a,
                 std::uint32_t b) {
  return (nodes[b].kind == gate_kind::g_not && nodes[b].a == a) ||
         (nodes[a].kind == gate_kind::g_not && nodes[a].a == b);
}

} // namespace

circuit_builder::wire circuit_builder::make_and(wire a, wire b) {
  if (a.is_false() || b.is_false())
    return wire::constant(false);
  if (a.is_true())
    return b;
  if (b.is_true())
    return a;
  if (a.id == b.id)
    return a;
  if (complements(nodes_, a.id, b.id))
    return wire::constant(false);
  if (a.id > b.id)
    std::swap(a, b);
  return add_node(gate_kind::g_and, a.id, b.id);
}

circuit_builder::wire circuit_builder::make_or(wire a, wire b) {
  if (a.is_true() || b.is_true())
    return wire::constant(true);
  if (a.is_false())
    return b;
  if (b.is_false())
    return a;
  if (a.id == b.id)
    return a;
  if (complements(nodes_, a.id, b.id))
    return wire::constant(true);
  if (a.id > b.id)
    std::swap(a, b);
  return add_node(gate_kind::g_or, a.id, b.id);
}

circuit_builder::wire circuit_builder::make_not(wire a) {
  if (a.is_constant())
    return wire::constant(!a.cval);
  // Collapse double negation.
  const auto& nd = nodes_[a.id];
  if (nd.kind == gate_kind::g_not)
    return {wire::tag::node, false, nd.a};
  return add_node(gate_kind::g_not, a.id, 0);
}

namespace {

using wire = circuit_builder::wire;

wire synth_rec(circuit_builder& b, std::vector<std::uint8_t> rows,
               const std::vector<wire>& args, std::uint32_t vars,
               std::unordered_map<std::string, wire>& memo) {
  bool all0 = true, all1 = true;
  for (auto r : rows) {
    all0 &= r == 0;
    all1 &= r == 1;
  }
  if (all0)
    return wire::constant(false);
  if (all1)
    return wire::constant(true);
  std::string key(rows.begin(), rows.end());
  key.push_back(static_cast<char>(vars));
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  // Split on the last argument: the low bit of the row index.
  const std::size_t half = rows.size() / 2;
  std::vector<std::uint8_t> r0(half), r1(half);
  for (std::size_t i = 0; i < half; ++i) {
    r0[i] = rows[2 * i];
    r1[i] = rows[2 * i + 1];
  }
  wire f0 = synth_rec(b, std::move(r0), args, vars - 1, memo);
  wire f1 = synth_rec(b, std::move(r1), args, vars - 1, memo);
  wire res = b.make_mux(args[vars - 1], f1, f0);
  memo.emplace(std::move(key), res);
  return res;
}

} // namespace

circuit_builder::wire synthesize_table(circuit_builder& b,
                                       const std::vector<std::uint8_t>& rows,
                                       const std::vector<wire>& args) {
  if (rows.size() != (std::size_t{1} << args.size()))
    throw std::invalid_argument("synthesize_table: row count mismatch");
  std::unordered_map<std::string, wire> memo;
  return synth_rec(b, rows, args, static_cast<std::uint32_t>(args.size()),
                   memo);
}

circuit circuit_builder::extract(wire out) const {
  circuit c;
  c.declared_input_size = n_;
  if (out.is_constant()) {
    if (n_ < 1)
      throw std::logic_error("circuit_builder: constant needs an input");
    return constant_circuit(n_, out.cval);
  }
  // Collect the cone of `out` and reindex in topological order.
  std::vector<std::uint32_t> order;
  std::vector<bool> mark(nodes_.size(), false);
  std::vector<std::uint32_t> stack = {out.id};
  mark[out.id] = true;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& nd = nodes_[v];
    if (nd.kind == gate_kind::g_and || nd.kind == gate_kind::g_or) {
      if (!mark[nd.a]) {
        mark[nd.a] = true;
        stack.push_back(nd.a);
      }
      if (!mark[nd.b]) {
        mark[nd.b] = true;
        stack.push_back(nd.b);
      }
    } else if (nd.kind == gate_kind::g_not) {
      if (!mark[nd.a]) {
        mark[nd.a] = true;
        stack.push_back(nd.a);
      }
    }
  }
  // Builder ids are already topological, so sorting by id works.
  std::sort(order.begin(), order.end());
  std::vector<std::uint32_t> remap(nodes_.size(), 0);
  for (std::uint32_t i = 0; i < order.size(); ++i)
    remap[order[i]] = i;
  for (std::uint32_t v : order) {
    circuit_node nd = nodes_[v];
    if (nd.kind != gate_kind::input) {
      nd.a = remap[nd.a];
      if (nd.kind != gate_kind::g_not)
        nd.b = remap[nd.b];
    }
    c.nodes.push_back(nd);
  }
  c.sink = remap[out.id];
  c.validate();
  return c;
}

} // namespace mdl
