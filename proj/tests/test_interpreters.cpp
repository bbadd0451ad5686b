#include <doctest.h>

#include <set>

#include "mdl/circuit_codec.hpp"
#include "mdl/errors.hpp"
#include "mdl/interpreter.hpp"
#include "mdl/machine_library.hpp"
#include "mdl/rng.hpp"
#include "mdl/turing_codec.hpp"

using namespace mdl;

namespace {

bits program_of(const turing_machine& m, const bits& payload = {}) {
  bits p = encode_machine(m);
  p.append(payload);
  return p;
}

} // namespace

TEST_CASE("universal interpreter runs the encoded machine on (u, x)") {
  auto t = concat_parity_2tape();
  rng r(101);
  for (int trial = 0; trial < 5; ++trial) {
    bits u = r.next_bits(1 + r.next_below(4));
    bits prog = program_of(t, u);
    auto iu = interpreter::universal();
    for (std::uint32_t v = 0; v < 8; ++v) {
      bits x;
      for (int i = 2; i >= 0; --i)
        x.push_back((v >> i) & 1u);
      auto direct = simulate(t, {u, x}, 100000);
      trit out = interpret(iu, prog, x);
      CHECK(out == (direct.result == verdict::one ? trit::one : trit::zero));
    }
  }
}

TEST_CASE("universal interpreter folds failures into bottom") {
  auto iu = interpreter::universal();
  CHECK(interpret(iu, bits("1"), bits("0")) == trit::bottom);
  CHECK(interpret(iu, bits(""), bits("0")) == trit::bottom);
  // A stuck machine is bottom under the unbounded interpreter.
  CHECK(interpret(iu, program_of(stuck_2tape()), bits("0")) == trit::bottom);
  // Cap exhaustion is bottom too.
  auto slow = interpreter::universal(3);
  CHECK(interpret(slow, program_of(parity_2tape()), bits("1111")) ==
        trit::bottom);
}

TEST_CASE("poly interpreter computes parity within its budget") {
  auto ip = interpreter::poly(2);
  bits prog = program_of(parity_2tape());
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
      bits x;
      for (std::uint32_t i = n; i-- > 0;)
        x.push_back((v >> i) & 1u);
      trit out = interpret(ip, prog, x);
      CHECK(out == (__builtin_popcount(v) % 2 ? trit::one : trit::zero));
    }
}

TEST_CASE("poly interpreter rejects on budget instead of bottom") {
  auto ip = interpreter::poly(2);
  bits prog = program_of(looping_2tape());
  CHECK(interpret(ip, prog, bits("1010")) == trit::zero);
  CHECK(interpret(ip, bits("10"), bits("1010")) == trit::bottom);
  // Total on every input size by construction.
  CHECK(interpret_table(ip, prog, 3).has_value());
}

TEST_CASE("poly budget follows ceil(beta * n^c)") {
  auto ip = interpreter::poly(2);
  CHECK(ip.poly_budget(4) == 16);
  auto half = interpreter::poly(3, 0.5);
  CHECK(half.poly_budget(3) == 14); // ceil(13.5)
}

TEST_CASE("interpret_table equals pointwise interpretation") {
  auto ip = interpreter::poly(2);
  bits prog = program_of(and_all_2tape());
  auto t = interpret_table(ip, prog, 3);
  REQUIRE(t.has_value());
  for (std::uint64_t x = 0; x < 8; ++x)
    CHECK(t->get(x) ==
          (interpret(ip, prog, t->input_of_row(x)) == trit::one));
}

TEST_CASE("minimal circuit description length of exclusive-or is 58") {
  auto ic = interpreter::circuit_interp();
  search_limits lim;
  lim.search_cap = 64;
  auto res = min_description_length(ic, truth_table::from_bits(2, 0b0110),
                                    lim);
  REQUIRE(res.value.has_value());
  CHECK(*res.value == 58);
  CHECK(res.exact);
  REQUIRE(res.witness.has_value());
  auto c = decode_circuit(*res.witness);
  REQUIRE(c.has_value());
  CHECK(circuit_table(*c).as_word() == 0b0110);
}

TEST_CASE("minimal circuit description length of a constant is 25") {
  auto ic = interpreter::circuit_interp();
  search_limits lim;
  lim.search_cap = 64;
  auto res =
      min_description_length(ic, constant_table(2, false), lim);
  REQUIRE(res.value.has_value());
  CHECK(*res.value == 25);
  CHECK(res.exact);
}

TEST_CASE("cap zero leaves every table unreachable") {
  auto ic = interpreter::circuit_interp();
  search_limits lim;
  lim.search_cap = 0;
  auto res = min_description_length(ic, constant_table(2, true), lim);
  CHECK(res.infinite());
  CHECK(res.exact);
}

TEST_CASE("search cap growth never increases an exact value") {
  auto ic = interpreter::circuit_interp();
  rng r(103);
  for (int i = 0; i < 20; ++i) {
    auto target = truth_table::from_bits(2, r.next_below(16));
    search_limits small;
    small.search_cap = 40;
    search_limits big;
    big.search_cap = 70;
    auto a = min_description_length(ic, target, small);
    auto b = min_description_length(ic, target, big);
    REQUIRE(b.value.has_value());
    if (a.value.has_value())
      CHECK(*b.value <= *a.value);
  }
}

TEST_CASE("poly search cap is clamped to the step budget") {
  auto ip = interpreter::poly(1, 1.0); // budget n at input size n
  search_limits lim;
  lim.search_cap = 64;
  lim.max_candidates = 1'000'000;
  // Only programs of length <= 2 are admissible at n = 2; none decodes.
  auto res = min_description_length(ip, constant_table(2, false), lim);
  CHECK(res.infinite());
  CHECK(res.exact);
}

TEST_CASE("blind machine enumeration finds the shortest stuck machine") {
  // The 5-bit code 00011 (three-state machine, no rules) rejects
  // everything under the time-limited interpreter. n = 3 keeps the
  // step-budget clamp (9 steps) above the search cap.
  auto ip = interpreter::poly(2);
  search_limits lim;
  lim.search_cap = 8;
  auto res = min_description_length(ip, constant_table(3, false), lim);
  REQUIRE(res.value.has_value());
  CHECK(*res.value == 5);
  CHECK(res.witness->to_string() == "00011");
}

TEST_CASE("the poly clamp hides programs longer than the step budget") {
  // At n = 1 the budget is one step, so the cap clamps to one bit and
  // even the 5-bit stuck machine is out of reach.
  auto ip = interpreter::poly(2);
  search_limits lim;
  lim.search_cap = 8;
  auto res = min_description_length(ip, constant_table(1, false), lim);
  CHECK(res.infinite());
  CHECK(res.exact);
}

TEST_CASE("infeasible blind enumeration raises a budget error") {
  auto iu = interpreter::universal();
  search_limits lim;
  lim.search_cap = 60;
  CHECK_THROWS_AS(
      min_description_length(iu, constant_table(2, false), lim),
      budget_error);
  lim.allow_upper_bound = true;
  auto res = min_description_length(iu, parity_table(3), lim);
  REQUIRE(res.value.has_value());
  CHECK(!res.exact);
  CHECK(*res.value == program_of(parity_2tape()).size());
}

TEST_CASE("wrapping a program through its machine costs the machine code") {
  // psi(u, x) = first bit of u; for constant targets |f|_psi = 1 and
  // [E(psi), bit] computes the constant under the universal machine.
  auto psi = first_program_bit_2tape();
  bits e = encode_machine(psi);
  auto iu = interpreter::universal();
  for (bool value : {false, true}) {
    bits prog = e;
    prog.push_back(value);
    auto t = interpret_table(iu, prog, 3);
    REQUIRE(t.has_value());
    CHECK(*t == constant_table(3, value));
    CHECK(prog.size() == 1 + e.size());
  }
}

TEST_CASE("network interpreter works under blind enumeration") {
  const auto& os = opset_by_name("fixed8");
  auto ia = interpreter::ann_interp(os);
  // The 9-bit single-node network reading the first input is the
  // shortest program for that wire function.
  CHECK(ann_encoding_length(2, 1, os.ops.size()) == 9);
  truth_table wire0(2);
  for (std::uint64_t x = 0; x < 4; ++x)
    wire0.set(x, (x >> 1) & 1u);
  search_limits lim;
  lim.search_cap = 9;
  auto res = min_description_length(ia, wire0, lim);
  REQUIRE(res.value.has_value());
  CHECK(*res.value == 9);
  auto dec = decode_ann(*res.witness, os);
  REQUIRE(dec.has_value());
  CHECK(dec->size() == 1);
}

TEST_CASE("decodable walk equals literal bitstring enumeration") {
  // All decodable 1- and 2-node encodings at n=2 (lengths 8 and 14),
  // cross-checked against decoding every bitstring of those lengths.
  for (std::uint32_t size : {1u, 2u}) {
    std::set<std::string> walked;
    std::uint64_t steps = 0;
    for_each_decodable_circuit(2, size, &steps, 1u << 20,
                               [&](const circuit& c, std::uint64_t) {
                                 walked.insert(encode_circuit(c).to_string());
                                 return true;
                               });
    std::set<std::string> brute;
    std::uint64_t len = circuit_encoding_length(2, size);
    bits candidate = bits::zeros(len);
    for (;;) {
      auto dec = decode_circuit(candidate);
      if (dec && dec->size() == size)
        brute.insert(candidate.to_string());
      bool more = false;
      for (std::size_t i = candidate.size(); i-- > 0;) {
        if (!candidate[i]) {
          bits nxt;
          for (std::size_t j = 0; j < i; ++j)
            nxt.push_back(candidate[j]);
          nxt.push_back(true);
          while (nxt.size() < candidate.size())
            nxt.push_back(false);
          candidate = nxt;
          more = true;
          break;
        }
      }
      if (!more)
        break;
    }
    CHECK(walked == brute);
  }
}
