#include "mdl/circuit_enum.hpp"

#include "mdl/errors.hpp"

namespace mdl {

namespace {

struct enum_state {
  const enumeration_options& opt;
  const std::function<bool(const circuit&, std::uint64_t)>& visit;
  std::uint32_t target_size = 0;
  std::uint64_t row_mask = 0;
  std::vector<std::uint64_t> input_mask;
  circuit work;
  std::vector<std::uint64_t> table;
  std::vector<std::uint32_t> refs;
  std::uint32_t unref = 0;
  std::uint64_t steps = 0;
  bool stopped = false;

  enum_state(const enumeration_options& o,
             const std::function<bool(const circuit&, std::uint64_t)>& v)
      : opt(o), visit(v) {
    const std::uint32_t n = opt.inputs;
    row_mask = n >= 6 ? ~std::uint64_t{0}
                      : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    input_mask.resize(n);
    for (std::uint32_t v2 = 0; v2 < n; ++v2) {
      std::uint64_t m = 0;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if ((x >> (n - 1 - v2)) & 1u)
          m |= std::uint64_t{1} << x;
      input_mask[v2] = m;
    }
    work.declared_input_size = n;
  }

  bool table_is_new(std::uint64_t t, std::uint32_t upto) const {
    for (std::uint32_t j = 0; j < upto; ++j)
      if (table[j] == t)
        return false;
    return true;
  }

  bool node_is_new(const circuit_node& nd, std::uint32_t upto) const {
    for (std::uint32_t j = 0; j < upto; ++j)
      if (work.nodes[j] == nd)
        return false;
    return true;
  }

  void place(std::uint32_t i) {
    if (stopped)
      return;
    if (++steps > opt.step_guard)
      throw budget_error("enumerate_canonical: step guard exceeded");
    // Each of the S-i nodes still to place nets at most one dangling
    // reference fewer (consumes up to two, adds itself); only the sink
    // may dangle at the end.
    if (unref > target_size - i + 1)
      return;

    auto try_node = [&](circuit_node nd, std::uint64_t t) {
      t &= row_mask;
      if (opt.distinct_node_functions) {
        if (!table_is_new(t, i))
          return;
      } else if (!node_is_new(nd, i)) {
        return;
      }
      std::uint32_t consumed = 0;
      if (nd.kind == gate_kind::g_and || nd.kind == gate_kind::g_or) {
        if (refs[nd.a]++ == 0)
          ++consumed;
        if (refs[nd.b]++ == 0)
          ++consumed;
      } else if (nd.kind == gate_kind::g_not) {
        if (refs[nd.a]++ == 0)
          ++consumed;
      }
      unref += 1 - consumed;
      work.nodes.push_back(nd);
      table[i] = t;
      if (i + 1 == target_size) {
        if (unref == 1) {
          work.sink = i;
          if (!visit(work, t))
            stopped = true;
        }
      } else {
        place(i + 1);
      }
      work.nodes.pop_back();
      unref -= 1 - consumed;
      if (nd.kind == gate_kind::g_and || nd.kind == gate_kind::g_or) {
        --refs[nd.a];
        --refs[nd.b];
      } else if (nd.kind == gate_kind::g_not) {
        --refs[nd.a];
      }
    };

    for (std::uint32_t v = 0; v < opt.inputs && !stopped; ++v)
      try_node({gate_kind::input, v, 0}, input_mask[v]);
    for (std::uint32_t a = 0; a < i && !stopped; ++a)
      for (std::uint32_t b = a + 1; b < i && !stopped; ++b)
        try_node({gate_kind::g_and, a, b}, table[a] & table[b]);
    for (std::uint32_t a = 0; a < i && !stopped; ++a)
      for (std::uint32_t b = a + 1; b < i && !stopped; ++b)
        try_node({gate_kind::g_or, a, b}, table[a] | table[b]);
    for (std::uint32_t a = 0; a < i && !stopped; ++a)
      try_node({gate_kind::g_not, a, 0}, ~table[a]);
  }
};

} // namespace

void enumerate_canonical(
    const enumeration_options& opt,
    const std::function<bool(const circuit&, std::uint64_t)>& visit) {
  if (opt.inputs < 1 || opt.inputs > 6 || opt.max_vertices > 16)
    throw budget_error("enumerate_canonical: outside the exhaustive regime");
  enum_state st(opt, visit);
  st.refs.assign(opt.max_vertices, 0);
  st.table.assign(opt.max_vertices, 0);
  for (std::uint32_t s = 1; s <= opt.max_vertices && !st.stopped; ++s) {
    st.target_size = s;
    st.place(0);
  }
}

} // namespace mdl
