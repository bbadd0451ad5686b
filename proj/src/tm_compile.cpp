#include "mdl/tm_compile.hpp"

#include <cmath>

#include "mdl/circuit_builder.hpp"
#include "mdl/errors.hpp"

namespace mdl {

namespace {

using wire = circuit_builder::wire;

// Cells are indexed by offset from the leftmost reachable position.
struct tape_state {
  std::int64_t origin = 0; // absolute position of index 0
  std::vector<wire> head;  // one-hot head position
  std::vector<wire> is0, is1; // work tapes only; blank = neither
};

} // namespace

compilation_report compile_machine(const turing_machine& m, std::uint32_t n,
                                   std::uint64_t t,
                                   std::uint64_t node_guard) {
  m.validate();
  if (m.num_input_tapes != 1)
    throw std::invalid_argument("compile_machine: needs one input tape");
  if (n < 2)
    throw std::invalid_argument("compile_machine: needs n >= 2");
  if (t < 1)
    throw std::invalid_argument("compile_machine: needs t >= 1");
  const double projected = static_cast<double>(t) *
                           static_cast<double>(t + n) *
                           static_cast<double>(m.num_states + 8);
  if (projected > 2e9)
    throw budget_error("compile_machine: tableau projection too large");

  circuit_builder b(n);
  const auto ti = static_cast<std::int64_t>(t);

  // Input tape: contents are fixed wires; the head spans [-t, n-1+t].
  tape_state in;
  in.origin = -ti;
  const std::size_t in_cells = static_cast<std::size_t>(2 * ti + n);
  in.head.assign(in_cells, wire::constant(false));
  in.head[static_cast<std::size_t>(ti)] = wire::constant(true);
  auto input_at = [&](std::size_t idx) -> std::optional<wire> {
    std::int64_t pos = in.origin + static_cast<std::int64_t>(idx);
    if (pos < 0 || pos >= static_cast<std::int64_t>(n))
      return std::nullopt; // blank
    return b.input(static_cast<std::uint32_t>(pos));
  };

  // Work tapes: heads span [-t, t], blank at the start.
  std::vector<tape_state> work(m.num_work_tapes);
  for (auto& w : work) {
    w.origin = -ti;
    const std::size_t cells = static_cast<std::size_t>(2 * ti + 1);
    w.head.assign(cells, wire::constant(false));
    w.head[static_cast<std::size_t>(ti)] = wire::constant(true);
    w.is0.assign(cells, wire::constant(false));
    w.is1.assign(cells, wire::constant(false));
  }

  std::vector<wire> state(m.num_states, wire::constant(false));
  state[m.initial_state] = wire::constant(true);

  std::vector<const rule_value*> rule_vals;
  std::vector<const rule_key*> rule_keys;
  for (const auto& [k, v] : m.rules) {
    rule_keys.push_back(&k);
    rule_vals.push_back(&v);
  }

  for (std::uint64_t step = 0; step < t; ++step) {
    if (b.node_count() > node_guard)
      throw budget_error("compile_machine: node guard exceeded");

    // Read indicators per tape and symbol.
    std::vector<wire> in_read(3, wire::constant(false));
    for (std::size_t idx = 0; idx < in.head.size(); ++idx) {
      auto content = input_at(idx);
      if (!content) {
        in_read[2] = b.make_or(in_read[2], in.head[idx]);
      } else {
        in_read[0] =
            b.make_or(in_read[0], b.make_and(in.head[idx],
                                             b.make_not(*content)));
        in_read[1] = b.make_or(in_read[1], b.make_and(in.head[idx], *content));
      }
    }
    std::vector<std::vector<wire>> work_read(m.num_work_tapes);
    for (std::uint32_t j = 0; j < m.num_work_tapes; ++j) {
      auto& rd = work_read[j];
      rd.assign(3, wire::constant(false));
      const auto& w = work[j];
      for (std::size_t idx = 0; idx < w.head.size(); ++idx) {
        rd[0] = b.make_or(rd[0], b.make_and(w.head[idx], w.is0[idx]));
        rd[1] = b.make_or(rd[1], b.make_and(w.head[idx], w.is1[idx]));
        rd[2] = b.make_or(
            rd[2], b.make_and(w.head[idx],
                              b.make_and(b.make_not(w.is0[idx]),
                                         b.make_not(w.is1[idx]))));
      }
    }

    // Rule applicability.
    std::vector<wire> match(rule_keys.size());
    for (std::size_t r = 0; r < rule_keys.size(); ++r) {
      const auto& key = *rule_keys[r];
      wire acc = state[key.state];
      acc = b.make_and(acc, in_read[static_cast<int>(key.reads[0])]);
      for (std::uint32_t j = 0; j < m.num_work_tapes; ++j)
        acc = b.make_and(acc,
                         work_read[j][static_cast<int>(key.reads[1 + j])]);
      match[r] = acc;
    }

    // Next state; final states absorb.
    std::vector<wire> next_state(m.num_states, wire::constant(false));
    for (std::size_t r = 0; r < rule_keys.size(); ++r) {
      auto q = rule_vals[r]->next_state;
      next_state[q] = b.make_or(next_state[q], match[r]);
    }
    next_state[m.accept_state] =
        b.make_or(next_state[m.accept_state], state[m.accept_state]);
    next_state[m.reject_state] =
        b.make_or(next_state[m.reject_state], state[m.reject_state]);

    // Input head movement.
    wire in_left = wire::constant(false), in_right = wire::constant(false);
    for (std::size_t r = 0; r < rule_keys.size(); ++r) {
      if (rule_vals[r]->input_moves[0] == tape_action::move_left)
        in_left = b.make_or(in_left, match[r]);
      else
        in_right = b.make_or(in_right, match[r]);
    }
    std::vector<wire> next_in_head(in.head.size(), wire::constant(false));
    for (std::size_t idx = 0; idx < in.head.size(); ++idx) {
      wire from_right = idx + 1 < in.head.size()
                            ? b.make_and(in_left, in.head[idx + 1])
                            : wire::constant(false);
      wire from_left = idx > 0 ? b.make_and(in_right, in.head[idx - 1])
                               : wire::constant(false);
      next_in_head[idx] = b.make_or(from_right, from_left);
    }
    in.head = std::move(next_in_head);

    // Work tapes: writes keep the head, moves shift it.
    for (std::uint32_t j = 0; j < m.num_work_tapes; ++j) {
      auto& w = work[j];
      wire wr0 = wire::constant(false), wr1 = wire::constant(false);
      wire wrb = wire::constant(false);
      wire mvl = wire::constant(false), mvr = wire::constant(false);
      for (std::size_t r = 0; r < rule_keys.size(); ++r) {
        switch (rule_vals[r]->work_actions[j]) {
        case tape_action::write_zero:
          wr0 = b.make_or(wr0, match[r]);
          break;
        case tape_action::write_one:
          wr1 = b.make_or(wr1, match[r]);
          break;
        case tape_action::write_blank:
          wrb = b.make_or(wrb, match[r]);
          break;
        case tape_action::move_left:
          mvl = b.make_or(mvl, match[r]);
          break;
        case tape_action::move_right:
          mvr = b.make_or(mvr, match[r]);
          break;
        }
      }
      wire any_write = b.make_or(b.make_or(wr0, wr1), wrb);
      std::vector<wire> next_head(w.head.size(), wire::constant(false));
      for (std::size_t idx = 0; idx < w.head.size(); ++idx) {
        wire stay = b.make_and(any_write, w.head[idx]);
        wire from_right = idx + 1 < w.head.size()
                              ? b.make_and(mvl, w.head[idx + 1])
                              : wire::constant(false);
        wire from_left = idx > 0 ? b.make_and(mvr, w.head[idx - 1])
                                 : wire::constant(false);
        next_head[idx] = b.make_or(stay, b.make_or(from_right, from_left));
      }
      std::vector<wire> next_is0(w.head.size()), next_is1(w.head.size());
      for (std::size_t idx = 0; idx < w.head.size(); ++idx) {
        wire here_written = b.make_and(w.head[idx], any_write);
        wire keep = b.make_not(here_written);
        next_is0[idx] = b.make_or(b.make_and(w.head[idx], wr0),
                                  b.make_and(w.is0[idx], keep));
        next_is1[idx] = b.make_or(b.make_and(w.head[idx], wr1),
                                  b.make_and(w.is1[idx], keep));
      }
      w.head = std::move(next_head);
      w.is0 = std::move(next_is0);
      w.is1 = std::move(next_is1);
    }
    state = std::move(next_state);
  }

  compilation_report rep;
  rep.realization = b.extract(state[m.accept_state]);
  rep.t = t;
  rep.rule_count = m.rules.size();
  rep.measured_size = rep.realization.size();
  const double logt = std::max(1.0, std::log2(static_cast<double>(t)));
  rep.bound_ratio =
      static_cast<double>(rep.measured_size) /
      (static_cast<double>(std::max<std::uint64_t>(1, rep.rule_count)) *
       static_cast<double>(t) * logt);
  return rep;
}

equivalence_check verify_equivalence(const turing_machine& m,
                                     const circuit& c, std::uint32_t n,
                                     std::uint64_t t) {
  if (n > 12)
    throw budget_error("verify_equivalence: n above the exhaustive guard");
  truth_table ct = circuit_table(c);
  for (std::uint64_t x = 0; x < ct.rows(); ++x) {
    bits input = ct.input_of_row(x);
    bool accepted = simulate(m, {input}, t).result == verdict::one;
    if (ct.get(x) != accepted)
      return {false, input};
  }
  return {true, std::nullopt};
}

} // namespace mdl
