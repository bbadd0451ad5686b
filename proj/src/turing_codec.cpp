#include "mdl/turing_codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdl {

namespace {

constexpr std::uint64_t kNonStateCodes = 5;

// Symbol and action codes share the top of the s-bit code space.
std::uint64_t code_base(unsigned s) {
  return (std::uint64_t{1} << s) - kNonStateCodes;
}

std::uint64_t symbol_code(symbol sym, unsigned s) {
  return code_base(s) + static_cast<std::uint64_t>(sym);
}

std::uint64_t action_code(tape_action a, unsigned s) {
  return code_base(s) + static_cast<std::uint64_t>(a);
}

} // namespace

turing_machine canonicalize_states(const turing_machine& m) {
  m.validate();
  if (m.initial_state == m.accept_state || m.initial_state == m.reject_state)
    throw std::invalid_argument(
        "canonicalize: initial state must not be final");
  std::vector<std::uint32_t> map(m.num_states, 0);
  map[m.initial_state] = 0;
  map[m.accept_state] = 1;
  map[m.reject_state] = 2;
  std::uint32_t next = 3;
  for (std::uint32_t q = 0; q < m.num_states; ++q) {
    if (q == m.initial_state || q == m.accept_state || q == m.reject_state)
      continue;
    map[q] = next++;
  }
  turing_machine out;
  out.num_states = std::max<std::uint32_t>(m.num_states, 3);
  out.num_input_tapes = m.num_input_tapes;
  out.num_work_tapes = m.num_work_tapes;
  out.initial_state = 0;
  out.accept_state = 1;
  out.reject_state = 2;
  for (const auto& [key, val] : m.rules) {
    rule_key k = key;
    k.state = map[key.state];
    rule_value v = val;
    v.next_state = map[val.next_state];
    out.rules.emplace(std::move(k), std::move(v));
  }
  return out;
}

bits encode_machine(const turing_machine& m) {
  m.validate();
  if (!m.has_canonical_state_ids())
    throw std::invalid_argument("encode_machine: relabel states first");
  if (m.num_states < 3)
    throw std::invalid_argument("encode_machine: needs >= 3 states");
  const unsigned s = ceil_log2(m.num_states + kNonStateCodes);
  bits out;
  out.append(bits::zeros(s));
  out.push_back(true);
  out.append(bits::zeros(m.rules.size()));
  out.push_back(true);
  for (const auto& [key, val] : m.rules) {
    out.append_uint(key.state, s);
    for (symbol sym : key.reads)
      out.append_uint(symbol_code(sym, s), s);
    out.append_uint(val.next_state, s);
    for (tape_action a : val.input_moves)
      out.append_uint(action_code(a, s), s);
    for (tape_action a : val.work_actions)
      out.append_uint(action_code(a, s), s);
  }
  return out;
}

std::optional<decoded_machine> decode_machine(const bits& code,
                                              std::uint32_t k1,
                                              std::uint32_t k2) {
  std::size_t pos = 0;
  unsigned s = 0;
  while (pos < code.size() && !code[pos]) {
    ++s;
    ++pos;
  }
  if (pos >= code.size() || s < 3 || s > 30)
    return std::nullopt;
  ++pos; // the 1 terminating the s block
  std::uint64_t r = 0;
  while (pos < code.size() && !code[pos]) {
    ++r;
    ++pos;
  }
  if (pos >= code.size())
    return std::nullopt;
  ++pos; // the 1 terminating the r block

  const std::uint64_t base = code_base(s);
  const std::uint64_t fields = machine_fields_per_rule(k1, k2);
  if (pos + r * s * fields > code.size())
    return std::nullopt;

  turing_machine m;
  m.num_input_tapes = k1;
  m.num_work_tapes = k2;
  m.initial_state = 0;
  m.accept_state = 1;
  m.reject_state = 2;
  std::uint32_t max_state = 2;

  auto next_field = [&]() {
    std::uint64_t v = code.read_uint(pos, s);
    pos += s;
    return v;
  };

  for (std::uint64_t i = 0; i < r; ++i) {
    rule_key key;
    rule_value val;
    std::uint64_t src = next_field();
    if (src >= base || src == 1 || src == 2)
      return std::nullopt; // not a state, or a rule on a final state
    key.state = static_cast<std::uint32_t>(src);
    for (std::uint32_t t = 0; t < k1 + k2; ++t) {
      std::uint64_t v = next_field();
      if (v < base || v > base + 2)
        return std::nullopt; // must be 0, 1, or b
      key.reads.push_back(static_cast<symbol>(v - base));
    }
    std::uint64_t tgt = next_field();
    if (tgt >= base)
      return std::nullopt;
    val.next_state = static_cast<std::uint32_t>(tgt);
    for (std::uint32_t t = 0; t < k1; ++t) {
      std::uint64_t v = next_field();
      if (v < base + 3 || v > base + 4)
        return std::nullopt; // input tapes only move
      val.input_moves.push_back(static_cast<tape_action>(v - base));
    }
    for (std::uint32_t t = 0; t < k2; ++t) {
      std::uint64_t v = next_field();
      if (v < base)
        return std::nullopt;
      val.work_actions.push_back(static_cast<tape_action>(v - base));
    }
    max_state = std::max({max_state, key.state, val.next_state});
    if (m.rules.count(key))
      return std::nullopt;
    m.rules.emplace(std::move(key), std::move(val));
  }
  m.num_states = max_state + 1;
  return decoded_machine{std::move(m), pos};
}

} // namespace mdl
