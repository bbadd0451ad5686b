#include "mdl/turing.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace mdl {

char to_char(symbol s) {
  switch (s) {
  case symbol::zero:
    return '0';
  case symbol::one:
    return '1';
  default:
    return 'b';
  }
}

char to_char(tape_action a) {
  switch (a) {
  case tape_action::write_zero:
    return '0';
  case tape_action::write_one:
    return '1';
  case tape_action::write_blank:
    return 'b';
  case tape_action::move_left:
    return 'L';
  default:
    return 'R';
  }
}

std::optional<symbol> symbol_from_char(char c) {
  switch (c) {
  case '0':
    return symbol::zero;
  case '1':
    return symbol::one;
  case 'b':
    return symbol::blank;
  default:
    return std::nullopt;
  }
}

std::optional<tape_action> action_from_char(char c) {
  switch (c) {
  case '0':
    return tape_action::write_zero;
  case '1':
    return tape_action::write_one;
  case 'b':
    return tape_action::write_blank;
  case 'L':
    return tape_action::move_left;
  case 'R':
    return tape_action::move_right;
  default:
    return std::nullopt;
  }
}

void turing_machine::validate() const {
  if (num_states < 2)
    throw std::invalid_argument("machine: needs at least 2 states");
  if (accept_state == reject_state)
    throw std::invalid_argument("machine: accept and reject must differ");
  if (initial_state >= num_states || accept_state >= num_states ||
      reject_state >= num_states)
    throw std::invalid_argument("machine: distinguished state out of range");
  const std::size_t k = num_input_tapes + num_work_tapes;
  for (const auto& [key, val] : rules) {
    if (is_final(key.state))
      throw std::invalid_argument("machine: rule on a final state");
    if (key.state >= num_states || val.next_state >= num_states)
      throw std::invalid_argument("machine: rule state out of range");
    if (key.reads.size() != k)
      throw std::invalid_argument("machine: rule read vector arity mismatch");
    if (val.input_moves.size() != num_input_tapes ||
        val.work_actions.size() != num_work_tapes)
      throw std::invalid_argument("machine: rule action arity mismatch");
    for (tape_action a : val.input_moves)
      if (!is_move(a))
        throw std::invalid_argument("machine: input tapes only move");
  }
}

namespace {

// Bi-infinite tape backed by two growable halves; cell 0 is the first
// input cell.
class tape {
public:
  explicit tape(const bits* content = nullptr) {
    if (content)
      for (std::size_t i = 0; i < content->size(); ++i)
        right_.push_back((*content)[i] ? symbol::one : symbol::zero);
  }

  symbol read() const {
    if (head_ >= 0) {
      auto i = static_cast<std::size_t>(head_);
      return i < right_.size() ? right_[i] : symbol::blank;
    }
    auto i = static_cast<std::size_t>(-head_ - 1);
    return i < left_.size() ? left_[i] : symbol::blank;
  }

  void write(symbol s) {
    if (head_ >= 0) {
      auto i = static_cast<std::size_t>(head_);
      if (i >= right_.size())
        right_.resize(i + 1, symbol::blank);
      right_[i] = s;
    } else {
      auto i = static_cast<std::size_t>(-head_ - 1);
      if (i >= left_.size())
        left_.resize(i + 1, symbol::blank);
      left_[i] = s;
    }
  }

  void move(tape_action a) { head_ += a == tape_action::move_right ? 1 : -1; }

private:
  std::vector<symbol> right_, left_;
  std::int64_t head_ = 0;
};

} // namespace

simulation_outcome simulate(const turing_machine& m,
                            const std::vector<bits>& inputs,
                            std::uint64_t budget) {
  if (inputs.size() != m.num_input_tapes)
    throw std::invalid_argument("simulate: input count mismatch");

  std::vector<tape> tapes;
  tapes.reserve(m.num_input_tapes + m.num_work_tapes);
  for (const auto& in : inputs)
    tapes.emplace_back(&in);
  for (std::uint32_t j = 0; j < m.num_work_tapes; ++j)
    tapes.emplace_back();

  std::uint32_t state = m.initial_state;
  rule_key key;
  key.reads.resize(tapes.size());
  for (std::uint64_t step = 0; step < budget; ++step) {
    if (m.is_final(state))
      break;
    key.state = state;
    for (std::size_t t = 0; t < tapes.size(); ++t)
      key.reads[t] = tapes[t].read();
    auto it = m.rules.find(key);
    if (it == m.rules.end())
      return {verdict::bottom, step, halt_reason::no_rule};
    const rule_value& rv = it->second;
    for (std::uint32_t t = 0; t < m.num_input_tapes; ++t)
      tapes[t].move(rv.input_moves[t]);
    for (std::uint32_t t = 0; t < m.num_work_tapes; ++t) {
      tape& w = tapes[m.num_input_tapes + t];
      tape_action a = rv.work_actions[t];
      if (is_move(a))
        w.move(a);
      else
        w.write(static_cast<symbol>(a));
    }
    state = rv.next_state;
    if (m.is_final(state)) {
      bool acc = state == m.accept_state;
      return {acc ? verdict::one : verdict::zero, step + 1,
              acc ? halt_reason::accept : halt_reason::reject};
    }
  }
  if (m.is_final(state)) {
    bool acc = state == m.accept_state;
    return {acc ? verdict::one : verdict::zero, 0,
            acc ? halt_reason::accept : halt_reason::reject};
  }
  return {verdict::bottom, budget, halt_reason::budget_exhausted};
}

std::string machine_to_text(const turing_machine& m) {
  std::ostringstream out;
  out << "tm k1=" << m.num_input_tapes << " k2=" << m.num_work_tapes
      << " states=" << m.num_states << "\n";
  for (const auto& [key, val] : m.rules) {
    out << "(" << key.state << ";";
    for (symbol s : key.reads)
      out << " " << to_char(s);
    out << ") -> (" << val.next_state << ";";
    for (tape_action a : val.input_moves)
      out << " " << to_char(a);
    for (tape_action a : val.work_actions)
      out << " " << to_char(a);
    out << ")\n";
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& line) {
  throw std::runtime_error("machine text: cannot parse line: " + line);
}

} // namespace

turing_machine machine_from_text(std::istream& in) {
  turing_machine m;
  m.initial_state = 0;
  m.accept_state = 1;
  m.reject_state = 2;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    if (!header_seen) {
      unsigned k1 = 0, k2 = 0, states = 0;
      if (std::sscanf(line.c_str(), "tm k1=%u k2=%u states=%u", &k1, &k2,
                      &states) != 3)
        parse_fail(line);
      m.num_input_tapes = k1;
      m.num_work_tapes = k2;
      m.num_states = states;
      header_seen = true;
      continue;
    }
    std::istringstream ls(line);
    auto expect = [&](char c) {
      char got = 0;
      ls >> got;
      if (got != c)
        parse_fail(line);
    };
    rule_key key;
    rule_value val;
    expect('(');
    if (!(ls >> key.state))
      parse_fail(line);
    expect(';');
    for (std::uint32_t t = 0; t < m.num_input_tapes + m.num_work_tapes; ++t) {
      char c = 0;
      ls >> c;
      auto s = symbol_from_char(c);
      if (!s)
        parse_fail(line);
      key.reads.push_back(*s);
    }
    expect(')');
    expect('-');
    expect('>');
    expect('(');
    if (!(ls >> val.next_state))
      parse_fail(line);
    expect(';');
    for (std::uint32_t t = 0; t < m.num_input_tapes; ++t) {
      char c = 0;
      ls >> c;
      auto a = action_from_char(c);
      if (!a || !is_move(*a))
        parse_fail(line);
      val.input_moves.push_back(*a);
    }
    for (std::uint32_t t = 0; t < m.num_work_tapes; ++t) {
      char c = 0;
      ls >> c;
      auto a = action_from_char(c);
      if (!a)
        parse_fail(line);
      val.work_actions.push_back(*a);
    }
    expect(')');
    if (m.rules.count(key))
      throw std::runtime_error("machine text: duplicate rule");
    m.rules.emplace(std::move(key), std::move(val));
  }
  if (!header_seen)
    throw std::runtime_error("machine text: missing header");
  m.validate();
  return m;
}

turing_machine machine_from_text(const std::string& text) {
  std::istringstream in(text);
  return machine_from_text(in);
}

} // namespace mdl
