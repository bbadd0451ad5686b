#include "mdl/dtree.hpp"

#include <sstream>
#include <stdexcept>

#include "mdl/circuit_builder.hpp"
#include "mdl/errors.hpp"

namespace mdl {

std::uint32_t decision_tree::leaf_count() const {
  std::uint32_t c = 0;
  for (const auto& nd : nodes)
    c += nd.leaf;
  return c;
}

namespace {

std::uint32_t fit_rec(decision_tree& t,
                      const std::vector<const sample*>& samples,
                      std::uint32_t num_vars) {
  bool all_same = true;
  for (const auto* s : samples)
    all_same &= s->y == samples.front()->y;
  if (all_same) {
    t.nodes.push_back({true, samples.front()->y, 0, 0, 0});
    return static_cast<std::uint32_t>(t.nodes.size() - 1);
  }
  // Lowest-index variable taking both values on the current set.
  for (std::uint32_t v = 0; v < num_vars; ++v) {
    std::vector<const sample*> ones, zeros;
    for (const auto* s : samples)
      (s->x[v] ? ones : zeros).push_back(s);
    if (ones.empty() || zeros.empty())
      continue;
    std::uint32_t c1 = fit_rec(t, ones, num_vars);
    std::uint32_t c0 = fit_rec(t, zeros, num_vars);
    t.nodes.push_back({false, false, v, c1, c0});
    return static_cast<std::uint32_t>(t.nodes.size() - 1);
  }
  // Labels differ but no variable separates the set: identical inputs
  // with contradictory labels.
  throw inconsistent_dataset_error(
      "fit_tree: contradictory labels for input " +
      samples.front()->x.to_string());
}

} // namespace

decision_tree fit_tree(const dataset& d) {
  if (d.empty())
    throw std::invalid_argument("fit_tree: needs at least one sample");
  std::uint32_t num_vars = static_cast<std::uint32_t>(d.samples[0].x.size());
  std::vector<const sample*> ptrs;
  for (const auto& s : d.samples) {
    if (s.x.size() != num_vars)
      throw std::invalid_argument("fit_tree: ragged sample lengths");
    ptrs.push_back(&s);
  }
  decision_tree t;
  t.root = fit_rec(t, ptrs, num_vars);
  return t;
}

bool eval_tree(const decision_tree& t, const bits& x) {
  std::uint32_t cur = t.root;
  for (;;) {
    const auto& nd = t.nodes[cur];
    if (nd.leaf)
      return nd.value;
    if (nd.var >= x.size())
      throw std::invalid_argument("eval_tree: variable beyond input length");
    cur = x[nd.var] ? nd.child1 : nd.child0;
  }
}

namespace {

using wire = circuit_builder::wire;

void collect_leaves(const decision_tree& t, circuit_builder& b,
                    std::uint32_t node, wire reach,
                    std::vector<std::pair<wire, bool>>& leaves) {
  const auto& nd = t.nodes[node];
  if (nd.leaf) {
    leaves.emplace_back(reach, nd.value);
    return;
  }
  wire lit = b.input(nd.var);
  collect_leaves(t, b, nd.child1, b.make_and(reach, lit), leaves);
  collect_leaves(t, b, nd.child0, b.make_and(reach, b.make_not(lit)),
                 leaves);
}

} // namespace

circuit tree_to_circuit(const decision_tree& t, std::uint32_t n) {
  circuit_builder b(n);
  std::vector<std::pair<wire, bool>> leaves;
  collect_leaves(t, b, t.root, wire::constant(true), leaves);
  // Two-register scan: x1 holds the answer of the first reached leaf,
  // x2 whether any leaf has been reached yet.
  wire x1 = wire::constant(false);
  wire x2 = wire::constant(false);
  for (const auto& [reached, value] : leaves) {
    x1 = b.make_mux(x2, x1, wire::constant(value));
    x2 = b.make_or(x2, reached);
  }
  return b.extract(x1);
}

circuit consistent_circuit(const dataset& d, std::uint32_t n) {
  return tree_to_circuit(fit_tree(d), n);
}

namespace {

void dump_rec(const decision_tree& t, std::uint32_t node, int depth,
              std::ostringstream& out) {
  const auto& nd = t.nodes[node];
  for (int i = 0; i < depth; ++i)
    out << "  ";
  if (nd.leaf) {
    out << "leaf " << (nd.value ? 1 : 0) << "\n";
    return;
  }
  out << "x" << nd.var << "?\n";
  dump_rec(t, nd.child1, depth + 1, out);
  dump_rec(t, nd.child0, depth + 1, out);
}

} // namespace

std::string tree_debug_dump(const decision_tree& t) {
  std::ostringstream out;
  out << "nodes " << t.node_count() << " leaves " << t.leaf_count() << "\n";
  dump_rec(t, t.root, 0, out);
  return out.str();
}

} // namespace mdl
