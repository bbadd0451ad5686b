#include "mdl/machine_library.hpp"

#include <stdexcept>

namespace mdl {

namespace {

constexpr auto L = tape_action::move_left;
constexpr auto R = tape_action::move_right;

const std::vector<symbol> kSyms = {symbol::zero, symbol::one, symbol::blank};

turing_machine base(std::uint32_t states, std::uint32_t k1,
                    std::uint32_t k2) {
  turing_machine m;
  m.num_states = states;
  m.num_input_tapes = k1;
  m.num_work_tapes = k2;
  m.initial_state = 0;
  m.accept_state = 1;
  m.reject_state = 2;
  return m;
}

void add_rule(turing_machine& m, std::uint32_t from,
              std::vector<symbol> reads, std::uint32_t to,
              std::vector<tape_action> input_moves,
              std::vector<tape_action> work_actions) {
  rule_key k{from, std::move(reads)};
  rule_value v{to, std::move(input_moves), std::move(work_actions)};
  if (!m.rules.emplace(std::move(k), std::move(v)).second)
    throw std::logic_error("machine_library: duplicate rule");
}

} // namespace

turing_machine parity_scanner_1tape() {
  // state 0: even so far, state 3: odd so far.
  auto m = base(4, 1, 0);
  add_rule(m, 0, {symbol::zero}, 0, {R}, {});
  add_rule(m, 0, {symbol::one}, 3, {R}, {});
  add_rule(m, 0, {symbol::blank}, 2, {R}, {});
  add_rule(m, 3, {symbol::zero}, 3, {R}, {});
  add_rule(m, 3, {symbol::one}, 0, {R}, {});
  add_rule(m, 3, {symbol::blank}, 1, {R}, {});
  return m;
}

turing_machine immediate_accept_1tape() {
  auto m = base(3, 1, 0);
  for (symbol s : kSyms)
    add_rule(m, 0, {s}, 1, {R}, {});
  return m;
}

turing_machine looping_1tape() {
  auto m = base(3, 1, 0);
  for (symbol s : kSyms)
    add_rule(m, 0, {s}, 0, {R}, {});
  return m;
}

turing_machine and_all_1tape() {
  auto m = base(3, 1, 0);
  add_rule(m, 0, {symbol::one}, 0, {R}, {});
  add_rule(m, 0, {symbol::zero}, 2, {R}, {});
  add_rule(m, 0, {symbol::blank}, 1, {R}, {});
  return m;
}

turing_machine or_all_1tape() {
  auto m = base(3, 1, 0);
  add_rule(m, 0, {symbol::zero}, 0, {R}, {});
  add_rule(m, 0, {symbol::one}, 1, {R}, {});
  add_rule(m, 0, {symbol::blank}, 2, {R}, {});
  return m;
}

turing_machine stuck_2tape() { return base(3, 2, 1); }

turing_machine const1_2tape() {
  auto m = base(3, 2, 1);
  for (symbol x : {symbol::zero, symbol::one})
    add_rule(m, 0, {symbol::blank, x, symbol::blank}, 1, {R, R}, {R});
  return m;
}

turing_machine first_bit_2tape() {
  auto m = base(3, 2, 1);
  add_rule(m, 0, {symbol::blank, symbol::zero, symbol::blank}, 2, {R, R},
           {R});
  add_rule(m, 0, {symbol::blank, symbol::one, symbol::blank}, 1, {R, R}, {R});
  return m;
}

turing_machine not_first_bit_2tape() {
  auto m = base(3, 2, 1);
  add_rule(m, 0, {symbol::blank, symbol::zero, symbol::blank}, 1, {R, R},
           {R});
  add_rule(m, 0, {symbol::blank, symbol::one, symbol::blank}, 2, {R, R}, {R});
  return m;
}

turing_machine and_all_2tape() {
  auto m = base(3, 2, 1);
  add_rule(m, 0, {symbol::blank, symbol::one, symbol::blank}, 0, {R, R}, {R});
  add_rule(m, 0, {symbol::blank, symbol::zero, symbol::blank}, 2, {R, R},
           {R});
  add_rule(m, 0, {symbol::blank, symbol::blank, symbol::blank}, 1, {R, R},
           {R});
  return m;
}

turing_machine or_all_2tape() {
  auto m = base(3, 2, 1);
  add_rule(m, 0, {symbol::blank, symbol::zero, symbol::blank}, 0, {R, R},
           {R});
  add_rule(m, 0, {symbol::blank, symbol::one, symbol::blank}, 1, {R, R}, {R});
  add_rule(m, 0, {symbol::blank, symbol::blank, symbol::blank}, 2, {R, R},
           {R});
  return m;
}

turing_machine nth_bit_2tape(std::uint32_t index) {
  // States 0,3,4,...: countdown over the first `index` bits of x.
  auto m = base(3 + index, 2, 1);
  for (std::uint32_t i = 0; i < index; ++i) {
    std::uint32_t from = i == 0 ? 0 : 2 + i;
    std::uint32_t to = 3 + i;
    for (symbol x : {symbol::zero, symbol::one})
      add_rule(m, from, {symbol::blank, x, symbol::blank}, to, {R, R}, {R});
  }
  std::uint32_t last = index == 0 ? 0 : 2 + index;
  add_rule(m, last, {symbol::blank, symbol::zero, symbol::blank}, 2, {R, R},
           {R});
  add_rule(m, last, {symbol::blank, symbol::one, symbol::blank}, 1, {R, R},
           {R});
  return m;
}

turing_machine parity_2tape() {
  // Parity bit lives in the first work cell: blank = even, one = odd.
  // The work head never moves, so every step writes.
  auto m = base(3, 2, 1);
  const auto W0 = tape_action::write_blank;
  const auto W1 = tape_action::write_one;
  add_rule(m, 0, {symbol::blank, symbol::zero, symbol::blank}, 0, {R, R},
           {W0});
  add_rule(m, 0, {symbol::blank, symbol::zero, symbol::one}, 0, {R, R}, {W1});
  add_rule(m, 0, {symbol::blank, symbol::one, symbol::blank}, 0, {R, R},
           {W1});
  add_rule(m, 0, {symbol::blank, symbol::one, symbol::one}, 0, {R, R}, {W0});
  add_rule(m, 0, {symbol::blank, symbol::blank, symbol::blank}, 2, {R, R},
           {W0});
  add_rule(m, 0, {symbol::blank, symbol::blank, symbol::one}, 1, {R, R},
           {W0});
  return m;
}

turing_machine concat_parity_2tape() {
  // Phase one scans the first tape tracking parity and the second
  // head's jiggle position; phase two scans the second tape. The
  // scanned tape's head advances right; the other head bounces between
  // two adjacent cells so both heads can satisfy the forced per-step
  // move.
  //
  // States: 0/3 = phase-1 parity 0/1 with x-head at 0,
  //         4/5 = phase-1 parity 0/1 with x-head at 1,
  //         6/7 = approach (x-head parked one cell left of x),
  //         8/9 = phase-2 parity 0/1, next h-move right,
  //         10/11 = phase-2 parity 0/1, next h-move left.
  auto m = base(12, 2, 1);
  auto p1 = [](int par, int xpos) -> std::uint32_t {
    return xpos == 0 ? (par == 0 ? 0u : 3u) : (par == 0 ? 4u : 5u);
  };
  auto approach = [](int par) -> std::uint32_t { return par == 0 ? 6u : 7u; };
  auto p2 = [](int par, bool next_right) -> std::uint32_t {
    return next_right ? (par == 0 ? 8u : 9u) : (par == 0 ? 10u : 11u);
  };

  for (int par = 0; par < 2; ++par) {
    for (int xpos = 0; xpos < 2; ++xpos) {
      for (symbol h : {symbol::zero, symbol::one})
        for (symbol x : kSyms) {
          int par2 = par ^ (h == symbol::one ? 1 : 0);
          add_rule(m, p1(par, xpos), {h, x, symbol::blank},
                   p1(par2, 1 - xpos), {R, xpos == 0 ? R : L}, {R});
        }
      for (symbol x : kSyms)
        add_rule(m, p1(par, xpos), {symbol::blank, x, symbol::blank},
                 xpos == 0 ? approach(par) : p2(par, true), {L, L}, {R});
    }
    for (symbol h : kSyms)
      add_rule(m, approach(par), {h, symbol::blank, symbol::blank},
               p2(par, false), {R, R}, {R});
    for (bool next_right : {true, false}) {
      tape_action hmove = next_right ? R : L;
      for (symbol h : kSyms) {
        for (symbol x : {symbol::zero, symbol::one}) {
          int par2 = par ^ (x == symbol::one ? 1 : 0);
          add_rule(m, p2(par, next_right), {h, x, symbol::blank},
                   p2(par2, !next_right), {hmove, R}, {R});
        }
        add_rule(m, p2(par, next_right), {h, symbol::blank, symbol::blank},
                 par == 1 ? 1 : 2, {hmove, R}, {R});
      }
    }
  }
  return m;
}

turing_machine indexer_2tape(std::uint32_t x_bits) {
  if (x_bits == 0 || x_bits > 16)
    throw std::invalid_argument("indexer: x_bits must be in [1,16]");
  const std::uint32_t n = x_bits;
  const std::uint32_t max_index = (1u << n) - 1;

  // State layout: 0 = read[0][0]; 1,2 finals; then read[i][v] for
  // i>=1; then walk[d][dir]; then arrive.
  std::uint32_t next_id = 3;
  std::vector<std::vector<std::uint32_t>> read_id(n);
  read_id[0] = {0};
  for (std::uint32_t i = 1; i < n; ++i) {
    read_id[i].resize(1u << i);
    for (auto& id : read_id[i])
      id = next_id++;
  }
  // After all n reads the u-head sits at cell n; walking distance to
  // index j is |j - n|.
  std::uint32_t max_walk = std::max(n, max_index > n ? max_index - n : 0);
  std::vector<std::uint32_t> walk_left(max_walk + 1), walk_right(max_walk + 1);
  for (std::uint32_t d = 1; d <= max_walk; ++d) {
    walk_left[d] = next_id++;
    walk_right[d] = next_id++;
  }
  std::uint32_t arrive = next_id++;

  auto m = base(next_id, 2, 1);

  auto walk_target = [&](std::uint32_t j) -> std::uint32_t {
    if (j == n)
      return arrive;
    if (j < n)
      return walk_left[n - j];
    return walk_right[j - n];
  };

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t v = 0; v < (1u << i); ++v) {
      for (int bit = 0; bit < 2; ++bit) {
        std::uint32_t v2 = (v << 1) | static_cast<std::uint32_t>(bit);
        std::uint32_t to = i + 1 < n ? read_id[i + 1][v2] : walk_target(v2);
        for (symbol u : kSyms)
          add_rule(m, read_id[i][v],
                   {u, bit ? symbol::one : symbol::zero, symbol::blank}, to,
                   {R, R}, {R});
      }
    }
  }
  for (std::uint32_t d = 1; d <= max_walk; ++d) {
    for (symbol u : kSyms)
      for (symbol x : kSyms) {
        add_rule(m, walk_left[d], {u, x, symbol::blank},
                 d == 1 ? arrive : walk_left[d - 1], {L, R}, {R});
        add_rule(m, walk_right[d], {u, x, symbol::blank},
                 d == 1 ? arrive : walk_right[d - 1], {R, R}, {R});
      }
  }
  for (symbol x : kSyms) {
    add_rule(m, arrive, {symbol::one, x, symbol::blank}, 1, {R, R}, {R});
    add_rule(m, arrive, {symbol::zero, x, symbol::blank}, 2, {R, R}, {R});
    add_rule(m, arrive, {symbol::blank, x, symbol::blank}, 2, {R, R}, {R});
  }
  return m;
}

turing_machine looping_2tape() {
  auto m = base(3, 2, 1);
  for (symbol u : kSyms)
    for (symbol x : kSyms)
      add_rule(m, 0, {u, x, symbol::blank}, 0, {R, R}, {R});
  return m;
}

turing_machine first_program_bit_2tape() {
  auto m = base(3, 2, 1);
  for (symbol x : kSyms) {
    add_rule(m, 0, {symbol::one, x, symbol::blank}, 1, {R, R}, {R});
    add_rule(m, 0, {symbol::zero, x, symbol::blank}, 2, {R, R}, {R});
  }
  return m;
}

} // namespace mdl
