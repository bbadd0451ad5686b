#include "mdl/hardwire.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace mdl {

turing_machine hardwire(const turing_machine& t, const bits& h,
                        std::uint32_t margin) {
  t.validate();
  if (t.num_input_tapes != 2)
    throw std::invalid_argument("hardwire: machine must have 2 input tapes");
  if (h.empty())
    throw std::invalid_argument("hardwire: h must be nonempty");

  const std::int64_t lo = -static_cast<std::int64_t>(margin);
  const std::int64_t hi = static_cast<std::int64_t>(h.size()) - 1 + margin;
  auto read_h = [&](std::int64_t p) {
    if (p < 0 || p >= static_cast<std::int64_t>(h.size()))
      return symbol::blank;
    return h[static_cast<std::size_t>(p)] ? symbol::one : symbol::zero;
  };

  turing_machine out;
  out.num_input_tapes = 1;
  out.num_work_tapes = t.num_work_tapes;
  out.initial_state = 0;
  out.accept_state = 1;
  out.reject_state = 2;

  // (state, h-position) -> new state id; finals collapse by position.
  std::map<std::pair<std::uint32_t, std::int64_t>, std::uint32_t> ids;
  std::uint32_t next_id = 3;
  auto id_of = [&](std::uint32_t q, std::int64_t p,
                   std::deque<std::pair<std::uint32_t, std::int64_t>>& work)
      -> std::uint32_t {
    if (q == t.accept_state)
      return 1;
    if (q == t.reject_state)
      return 2;
    auto [it, inserted] = ids.emplace(std::make_pair(q, p), next_id);
    if (inserted) {
      ++next_id;
      work.emplace_back(q, p);
    }
    return it->second;
  };

  if (t.is_final(t.initial_state)) {
    // Degenerate constant machine: halts before any step.
    out.num_states = 3;
    out.initial_state = t.initial_state == t.accept_state ? 1 : 2;
    return out;
  }

  std::deque<std::pair<std::uint32_t, std::int64_t>> work;
  ids.emplace(std::make_pair(t.initial_state, std::int64_t{0}), 0u);
  work.emplace_back(t.initial_state, 0);

  while (!work.empty()) {
    auto [q, p] = work.front();
    work.pop_front();
    const std::uint32_t from = ids.at({q, p});
    const symbol h_read = read_h(p);
    for (const auto& [key, val] : t.rules) {
      if (key.state != q || key.reads[0] != h_read)
        continue;
      std::int64_t p2 =
          p + (val.input_moves[0] == tape_action::move_right ? 1 : -1);
      if (p2 < lo || p2 > hi)
        throw std::runtime_error(
            "hardwire: head excursion on the hardwired tape exceeds window");
      rule_key k;
      k.state = from;
      k.reads.assign(key.reads.begin() + 1, key.reads.end());
      rule_value v;
      v.next_state = id_of(val.next_state, p2, work);
      v.input_moves.assign(val.input_moves.begin() + 1,
                           val.input_moves.end());
      v.work_actions = val.work_actions;
      out.rules.emplace(std::move(k), std::move(v));
    }
  }

  out.num_states = next_id;
  out.validate();
  return out;
}

} // namespace mdl
