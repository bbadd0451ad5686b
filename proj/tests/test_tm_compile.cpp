#include <doctest.h>

#include "mdl/errors.hpp"
#include "mdl/hardwire.hpp"
#include "mdl/interpreter.hpp"
#include "mdl/machine_library.hpp"
#include "mdl/rng.hpp"
#include "mdl/tm_compile.hpp"
#include "mdl/turing_codec.hpp"

using namespace mdl;

TEST_CASE("compiled parity agrees with the machine on all inputs") {
  auto m = parity_scanner_1tape();
  auto rep = compile_machine(m, 3, 10);
  auto check = verify_equivalence(m, rep.realization, 3, 10);
  CHECK(check.ok);
  CHECK(circuit_table(rep.realization) == parity_table(3));
}

TEST_CASE("immediate accept compiles to the constant one") {
  for (std::uint32_t n : {2u, 4u}) {
    auto rep = compile_machine(immediate_accept_1tape(), n, 1);
    CHECK(circuit_table(rep.realization) == constant_table(n, true));
  }
}

TEST_CASE("a looping machine compiles to the constant zero") {
  auto rep = compile_machine(looping_1tape(), 3, 4);
  CHECK(circuit_table(rep.realization) == constant_table(3, false));
}

TEST_CASE("budget-truncated semantics: too small a budget rejects") {
  // Parity of 4 bits needs 5 steps; with t = 3 nothing accepts.
  auto m = parity_scanner_1tape();
  auto rep = compile_machine(m, 4, 3);
  CHECK(circuit_table(rep.realization) == constant_table(4, false));
  auto check = verify_equivalence(m, rep.realization, 4, 3);
  CHECK(check.ok);
}

TEST_CASE("budgets beyond the halting time leave the function unchanged") {
  auto m = and_all_1tape();
  auto small = compile_machine(m, 3, 4);
  auto large = compile_machine(m, 3, 9);
  CHECK(circuit_table(small.realization) == circuit_table(large.realization));
}

TEST_CASE("verification reports a concrete counterexample on mutation") {
  auto m = parity_scanner_1tape();
  auto rep = compile_machine(m, 3, 10);
  circuit broken = rep.realization;
  // Flip the sink by negating it.
  broken.nodes.push_back({gate_kind::g_not, broken.sink, 0});
  broken.sink = broken.size() - 1;
  auto check = verify_equivalence(m, broken, 3, 10);
  CHECK(!check.ok);
  REQUIRE(check.counterexample.has_value());
  CHECK(eval_circuit(broken, *check.counterexample) !=
        (simulate(m, {*check.counterexample}, 10).result == verdict::one));
}

TEST_CASE("compilation rejects multi-input machines and tiny n") {
  CHECK_THROWS_AS(compile_machine(parity_2tape(), 3, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(compile_machine(parity_scanner_1tape(), 1, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(compile_machine(parity_scanner_1tape(), 0, 5),
                  std::invalid_argument);
}

TEST_CASE("the whole suite compiles correctly for n up to 6") {
  auto suite = {parity_scanner_1tape(), immediate_accept_1tape(),
                looping_1tape(), and_all_1tape(), or_all_1tape()};
  for (const auto& m : suite)
    for (std::uint32_t n = 2; n <= 6; ++n) {
      std::uint64_t t = n + 2;
      auto rep = compile_machine(m, n, t);
      CHECK(verify_equivalence(m, rep.realization, n, t).ok);
      CHECK(rep.measured_size == rep.realization.size());
      CHECK(rep.bound_ratio > 0);
    }
}

TEST_CASE("a machine with a work tape compiles correctly") {
  // Writes the first bit, walks right, walks back, and accepts iff the
  // stored bit is one.
  turing_machine m;
  m.num_states = 6;
  m.num_input_tapes = 1;
  m.num_work_tapes = 1;
  m.initial_state = 0;
  m.accept_state = 1;
  m.reject_state = 2;
  const auto L = tape_action::move_left;
  const auto R = tape_action::move_right;
  auto add = [&](std::uint32_t f, symbol in, symbol w, std::uint32_t to,
                 tape_action im, tape_action wa) {
    m.rules[{f, {in, w}}] = {to, {im}, {wa}};
  };
  for (symbol in : {symbol::zero, symbol::one, symbol::blank}) {
    // state 0: copy the input bit into the work cell
    add(0, in, symbol::blank,
        in == symbol::one ? 3u : 4u, R,
        in == symbol::one ? tape_action::write_one
                          : tape_action::write_zero);
  }
  for (symbol in : {symbol::zero, symbol::one, symbol::blank})
    for (symbol w : {symbol::zero, symbol::one, symbol::blank}) {
      add(3, in, w, 5, R, R); // step away
      add(4, in, w, 2, R, R); // zero bit: reject soon
    }
  for (symbol in : {symbol::zero, symbol::one, symbol::blank}) {
    add(5, in, symbol::blank, 5, R, L); // walk back
    add(5, in, symbol::one, 1, R, R);   // found the stored one
    add(5, in, symbol::zero, 2, R, R);
  }
  m.validate();
  auto rep = compile_machine(m, 3, 8);
  CHECK(verify_equivalence(m, rep.realization, 3, 8).ok);
  // The machine accepts exactly when the first bit is one.
  truth_table expect(3);
  for (std::uint64_t x = 0; x < 8; ++x)
    expect.set(x, (x >> 2) & 1u);
  CHECK(circuit_table(rep.realization) == expect);
}

TEST_CASE("compiling a hardwired program realizes the poly interpreter") {
  // The composition used to turn machine hypotheses into circuits: a
  // program under the time-limited interpreter, hardwired and unrolled,
  // equals that interpreter's restriction to n-bit inputs.
  auto t = indexer_2tape(2);
  rng r(911);
  auto ip = interpreter::poly(2);
  for (int trial = 0; trial < 4; ++trial) {
    bits u = r.next_bits(4);
    bits prog = encode_machine(t);
    prog.append(u);
    auto wired = hardwire(t, u, 4);
    const std::uint32_t n = 2;
    std::uint64_t budget = ip.poly_budget(n);
    auto rep = compile_machine(wired, n, budget);
    auto table = circuit_table(rep.realization);
    for (std::uint64_t x = 0; x < 4; ++x) {
      trit direct = interpret(ip, prog, table.input_of_row(x));
      CHECK((direct == trit::one) == table.get(x));
    }
  }
}
