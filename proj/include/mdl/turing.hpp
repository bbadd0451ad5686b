#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdl/bits.hpp"

namespace mdl {

// Tape alphabet.
enum class symbol : std::uint8_t { zero = 0, one = 1, blank = 2 };

// Per-step action on a work tape: write a symbol or move the head.
// Input-tape heads always move (left or right), so their action is a
// tape_action restricted to move_left/move_right.
enum class tape_action : std::uint8_t {
  write_zero = 0,
  write_one = 1,
  write_blank = 2,
  move_left = 3,
  move_right = 4
};

inline bool is_move(tape_action a) {
  return a == tape_action::move_left || a == tape_action::move_right;
}

char to_char(symbol s);
char to_char(tape_action a);
std::optional<symbol> symbol_from_char(char c);
std::optional<tape_action> action_from_char(char c);

struct rule_key {
  std::uint32_t state = 0;
  std::vector<symbol> reads; // k1 input reads then k2 work reads

  bool operator<(const rule_key& o) const {
    if (state != o.state)
      return state < o.state;
    return reads < o.reads;
  }
  bool operator==(const rule_key& o) const {
    return state == o.state && reads == o.reads;
  }
};

struct rule_value {
  std::uint32_t next_state = 0;
  std::vector<tape_action> input_moves; // k1 entries, moves only
  std::vector<tape_action> work_actions; // k2 entries

  bool operator==(const rule_value& o) const {
    return next_state == o.next_state && input_moves == o.input_moves &&
           work_actions == o.work_actions;
  }
};

// Deterministic machine with k1 read-only input tapes and k2 read/write
// work tapes. The rule map is partial: a missing rule in a non-final
// state halts the run with a pending verdict.
struct turing_machine {
  std::uint32_t num_states = 0;
  std::uint32_t num_input_tapes = 0;
  std::uint32_t num_work_tapes = 0;
  std::uint32_t initial_state = 0;
  std::uint32_t accept_state = 0;
  std::uint32_t reject_state = 0;
  std::map<rule_key, rule_value> rules;

  bool operator==(const turing_machine& o) const = default;

  bool is_final(std::uint32_t q) const {
    return q == accept_state || q == reject_state;
  }

  // Throws std::invalid_argument when a structural invariant fails.
  void validate() const;

  // q0=0, accept=1, reject=2; required by the binary encoder.
  bool has_canonical_state_ids() const {
    return initial_state == 0 && accept_state == 1 && reject_state == 2;
  }
};

enum class verdict : std::uint8_t { one, zero, bottom };
enum class halt_reason : std::uint8_t {
  accept,
  reject,
  no_rule,
  budget_exhausted
};

struct simulation_outcome {
  verdict result = verdict::bottom;
  std::uint64_t steps_used = 0;
  halt_reason reason = halt_reason::budget_exhausted;

  bool operator==(const simulation_outcome&) const = default;
};

// Runs the machine on the given inputs for at most `budget` transitions.
// Throws std::invalid_argument if inputs.size() != num_input_tapes.
simulation_outcome simulate(const turing_machine& m,
                            const std::vector<bits>& inputs,
                            std::uint64_t budget);

// Text format:
//   tm k1=<int> k2=<int> states=<int>
//   (<state>; <sym> ...) -> (<state>; <act> ...)
// State ids follow the canonical convention: 0 = initial, 1 = accept,
// 2 = reject.
std::string machine_to_text(const turing_machine& m);
turing_machine machine_from_text(std::istream& in);
turing_machine machine_from_text(const std::string& text);

} // namespace mdl
