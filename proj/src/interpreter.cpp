#include "mdl/interpreter.hpp"

#include <cmath>

#include "mdl/circuit.hpp"
#include "mdl/ann_convert.hpp"
#include "mdl/circuit_codec.hpp"
#include "mdl/circuit_search.hpp"
#include "mdl/errors.hpp"
#include "mdl/program_pool.hpp"
#include "mdl/turing_codec.hpp"

namespace mdl {

std::string interpreter::name() const {
  switch (k) {
  case kind::universal:
    return "universal";
  case kind::poly:
    return "poly" + std::to_string(c);
  case kind::circuit:
    return "circuit";
  default:
    return "ann-" + (opset ? opset->name : std::string("unset"));
  }
}

std::uint64_t interpreter::poly_budget(std::uint64_t input_len) const {
  double steps = beta * std::pow(static_cast<double>(input_len),
                                 static_cast<double>(c));
  if (steps > 1e15)
    throw budget_error("poly interpreter: step budget overflow");
  return static_cast<std::uint64_t>(std::ceil(steps));
}

namespace {

trit machine_interpret(const interpreter& interp, const bits& program,
                       const bits& input) {
  auto dec = decode_machine(program, 2, interp.work_tapes);
  if (!dec)
    return trit::bottom;
  bits payload =
      program.slice(dec->bits_consumed, program.size() - dec->bits_consumed);
  if (interp.k == interpreter::kind::universal) {
    auto out = simulate(dec->machine, {payload, input}, interp.hard_cap);
    switch (out.result) {
    case verdict::one:
      return trit::one;
    case verdict::zero:
      return trit::zero;
    default:
      return trit::bottom;
    }
  }
  auto out = simulate(dec->machine, {payload, input},
                      interp.poly_budget(input.size()));
  // Running out of time or getting stuck rejects; only a decode
  // failure produces bottom under the time-limited interpreter.
  return out.result == verdict::one ? trit::one : trit::zero;
}

} // namespace

trit interpret(const interpreter& interp, const bits& program,
               const bits& input) {
  switch (interp.k) {
  case interpreter::kind::universal:
  case interpreter::kind::poly:
    return machine_interpret(interp, program, input);
  case interpreter::kind::circuit: {
    auto c = decode_circuit(program);
    if (!c || c->declared_input_size != input.size())
      return trit::bottom;
    return trit_of(eval_circuit(*c, input));
  }
  default: {
    auto a = decode_ann(program, *interp.opset);
    if (!a || a->declared_input_size != input.size())
      return trit::bottom;
    return eval_ann(*a, *interp.opset, input);
  }
  }
}

std::optional<truth_table> interpret_table(const interpreter& interp,
                                           const bits& program,
                                           std::uint32_t n) {
  // Decode once; a per-row interpret() would redo it 2^n times.
  switch (interp.k) {
  case interpreter::kind::circuit: {
    auto c = decode_circuit(program);
    if (!c || c->declared_input_size != n)
      return std::nullopt;
    return circuit_table(*c);
  }
  case interpreter::kind::ann: {
    auto a = decode_ann(program, *interp.opset);
    if (!a || a->declared_input_size != n)
      return std::nullopt;
    bool bottom_seen = false;
    auto t = ann_table(*a, *interp.opset, &bottom_seen);
    if (bottom_seen)
      return std::nullopt;
    return t;
  }
  default: {
    auto dec = decode_machine(program, 2, interp.work_tapes);
    if (!dec)
      return std::nullopt;
    bits payload = program.slice(dec->bits_consumed,
                                 program.size() - dec->bits_consumed);
    truth_table t(n);
    const bool poly = interp.k == interpreter::kind::poly;
    const std::uint64_t budget =
        poly ? interp.poly_budget(n) : interp.hard_cap;
    for (std::uint64_t row = 0; row < t.rows(); ++row) {
      auto out = simulate(dec->machine, {payload, t.input_of_row(row)},
                          budget);
      if (out.result == verdict::bottom && !poly)
        return std::nullopt;
      t.set(row, out.result == verdict::one);
    }
    return t;
  }
  }
}

namespace {

// Decodable circuit encodings of exactly `size` nodes, visited in
// encoded lexicographic order: label code order, then payload order,
// with forward references and out-of-range variables never generated.
// The one childless node of any decodable list is necessarily the
// last, so only that constraint is checked at the leaves.
struct decodable_enum {
  std::uint32_t n = 0;
  std::uint32_t size = 0;
  std::uint64_t row_mask = 0;
  std::vector<std::uint64_t> input_mask;
  circuit work;
  std::vector<std::uint64_t> table;
  std::vector<std::uint32_t> refs;
  std::uint32_t unref = 0;
  std::uint64_t* steps = nullptr;
  std::uint64_t step_guard = 0;
  const std::function<bool(const circuit&, std::uint64_t)>* visit = nullptr;
  bool stopped = false;

  void init(std::uint32_t n_, std::uint32_t size_) {
    n = n_;
    size = size_;
    row_mask = n >= 6 ? ~std::uint64_t{0}
                      : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    input_mask.assign(n, 0);
    for (std::uint32_t v = 0; v < n; ++v)
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if ((x >> (n - 1 - v)) & 1u)
          input_mask[v] |= std::uint64_t{1} << x;
    work.declared_input_size = n;
    work.nodes.clear();
    table.assign(size, 0);
    refs.assign(size, 0);
    unref = 0;
  }

  void place(std::uint32_t i) {
    if (stopped)
      return;
    if (++*steps > step_guard)
      throw budget_error("description-length search: candidate guard hit");
    if (unref > size - i + 1)
      return;

    auto try_node = [&](circuit_node nd, std::uint64_t t) {
      t &= row_mask;
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
      if (i + 1 == size) {
        if (unref == 1) {
          work.sink = i;
          if (!(*visit)(work, t))
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

    for (std::uint32_t v = 0; v < n && !stopped; ++v)
      try_node({gate_kind::input, v, 0}, input_mask[v]);
    // The payload packs (a, b), so lexicographic payload order is a
    // ascending then b ascending, with equal and reversed pairs legal.
    for (std::uint32_t a = 0; a < i && !stopped; ++a)
      for (std::uint32_t b = 0; b < i && !stopped; ++b)
        try_node({gate_kind::g_and, a, b}, table[a] & table[b]);
    for (std::uint32_t a = 0; a < i && !stopped; ++a)
      for (std::uint32_t b = 0; b < i && !stopped; ++b)
        try_node({gate_kind::g_or, a, b}, table[a] | table[b]);
    for (std::uint32_t a = 0; a < i && !stopped; ++a)
      try_node({gate_kind::g_not, a, 0}, ~table[a]);
  }
};

} // namespace

void for_each_decodable_circuit(
    std::uint32_t n, std::uint32_t size, std::uint64_t* steps,
    std::uint64_t step_guard,
    const std::function<bool(const circuit&, std::uint64_t)>& visit) {
  decodable_enum e;
  e.init(n, size);
  e.steps = steps;
  e.step_guard = step_guard;
  e.visit = &visit;
  e.place(0);
}

namespace {

// Lexicographically next bit string of the same length; false at the
// all-ones string.
bool next_lex(bits& b) {
  for (std::size_t i = b.size(); i-- > 0;) {
    if (!b[i]) {
      // set bit i, clear everything after
      bits out;
      for (std::size_t j = 0; j < i; ++j)
        out.push_back(b[j]);
      out.push_back(true);
      while (out.size() < b.size())
        out.push_back(false);
      b = out;
      return true;
    }
  }
  return false;
}

bool program_matches(const interpreter& interp, const bits& program,
                     const truth_table& target) {
  for (std::uint64_t row = 0; row < target.rows(); ++row) {
    trit v = interpret(interp, program, target.input_of_row(row));
    if (v == trit::bottom || (v == trit::one) != target.get(row))
      return false;
  }
  return true;
}

description_length upper_bound_result(const interpreter& interp,
                                      const truth_table& target) {
  description_length res;
  res.exact = false;
  switch (interp.k) {
  case interpreter::kind::circuit: {
    auto c = shannon_build(target);
    res.witness = encode_circuit(c);
    res.value = res.witness->size();
    return res;
  }
  case interpreter::kind::ann: {
    auto c = shannon_build(target);
    auto a = circuit_to_ann(c, *interp.opset);
    res.witness = encode_ann(a, *interp.opset);
    res.value = res.witness->size();
    return res;
  }
  default: {
    for (const auto& prog : machine_program_pool()) {
      auto t = interpret_table(interp, prog.code, target.inputs());
      if (t && *t == target) {
        res.witness = prog.code;
        res.value = prog.code.size();
        return res;
      }
    }
    return res; // +infinity, not exact
  }
  }
}

} // namespace

description_length min_description_length(const interpreter& interp,
                                          const truth_table& target,
                                          const search_limits& lim) {
  const std::uint32_t n = target.inputs();
  if (n > lim.max_inputs)
    throw budget_error("min_description_length: input size above the guard");

  std::uint64_t cap = lim.search_cap;
  if (interp.k == interpreter::kind::poly)
    cap = std::min(cap, interp.poly_budget(n));

  if (interp.k == interpreter::kind::circuit) {
    // Walk decodable encodings size by size; all other strings of these
    // lengths fail to decode and a mismatched header never satisfies
    // totality on n-bit inputs.
    description_length res;
    std::uint64_t steps = 0;
    if (n >= 2) {
      for (std::uint32_t size = 1; circuit_encoding_length(n, size) <= cap;
           ++size) {
        bool found = false;
        circuit found_c;
        for_each_decodable_circuit(
            n, size, &steps, lim.max_candidates,
            [&](const circuit& c, std::uint64_t word) {
              truth_table t(n);
              for (std::uint64_t x = 0; x < t.rows(); ++x)
                t.set(x, (word >> x) & 1u);
              if (t == target) {
                found = true;
                found_c = c;
                return false;
              }
              return true;
            });
        if (found) {
          res.witness = encode_circuit(found_c);
          res.value = res.witness->size();
          res.exact = true;
          return res;
        }
      }
    }
    res.exact = true; // +infinity over the whole capped space
    return res;
  }

  // Blind enumeration for machine and network codes.
  const bool feasible =
      cap < 63 && ((std::uint64_t{1} << (cap + 1)) - 1) *
                          std::max<std::uint64_t>(1, target.rows() / 4) <=
                      lim.max_candidates;
  if (!feasible) {
    if (lim.allow_upper_bound)
      return upper_bound_result(interp, target);
    throw budget_error(
        "min_description_length: blind enumeration over 2^" +
        std::to_string(cap + 1) +
        " candidates exceeds the guard; raise it or allow upper bounds");
  }
  description_length res;
  for (std::uint64_t len = 0; len <= cap; ++len) {
    bits candidate = bits::zeros(len);
    for (;;) {
      if (program_matches(interp, candidate, target)) {
        res.witness = candidate;
        res.value = len;
        res.exact = true;
        return res;
      }
      if (!next_lex(candidate))
        break;
    }
  }
  res.exact = true;
  return res;
}

} // namespace mdl
