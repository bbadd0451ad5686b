#include <doctest.h>

#include <cmath>
#include <set>

#include "mdl/circuit.hpp"
#include "mdl/circuit_builder.hpp"
#include "mdl/circuit_codec.hpp"
#include "mdl/circuit_enum.hpp"
#include "mdl/circuit_search.hpp"
#include "mdl/errors.hpp"
#include "mdl/rng.hpp"

using namespace mdl;

namespace {

// The canonical 6-vertex exclusive-or: (x or y) and not(x and y).
circuit xor2_circuit() {
  circuit c;
  c.declared_input_size = 2;
  c.nodes = {
      {gate_kind::input, 0, 0}, {gate_kind::input, 1, 0},
      {gate_kind::g_or, 0, 1},  {gate_kind::g_and, 0, 1},
      {gate_kind::g_not, 3, 0}, {gate_kind::g_and, 2, 4},
  };
  c.sink = 5;
  return c;
}

circuit random_circuit(rng& r, std::uint32_t n, std::uint32_t gates) {
  circuit_builder b(n);
  std::vector<circuit_builder::wire> wires;
  for (std::uint32_t v = 0; v < n; ++v)
    wires.push_back(b.input(v));
  for (std::uint32_t g = 0; g < gates; ++g) {
    auto pick = [&] { return wires[r.next_below(wires.size())]; };
    circuit_builder::wire w;
    switch (r.next_below(3)) {
    case 0:
      w = b.make_and(pick(), pick());
      break;
    case 1:
      w = b.make_or(pick(), pick());
      break;
    default:
      w = b.make_not(pick());
      break;
    }
    wires.push_back(w);
  }
  return b.extract(wires.back());
}

} // namespace

TEST_CASE("evaluation basics") {
  auto c = xor2_circuit();
  CHECK(eval_circuit(c, bits("10")) == 1);
  CHECK(eval_circuit(c, bits("01")) == 1);
  CHECK(eval_circuit(c, bits("00")) == 0);
  CHECK(eval_circuit(c, bits("11")) == 0);
  CHECK(eval_circuit(wire_circuit(1, 0), bits("0")) == 0);

  circuit notc;
  notc.declared_input_size = 1;
  notc.nodes = {{gate_kind::input, 0, 0}, {gate_kind::g_not, 0, 0}};
  notc.sink = 1;
  CHECK(eval_circuit(notc, bits("0")) == 1);

  CHECK_THROWS_AS(eval_circuit(c, bits("101")), std::invalid_argument);
}

TEST_CASE("bit-parallel table agrees with pointwise evaluation") {
  rng r(3);
  for (int i = 0; i < 100; ++i) {
    std::uint32_t n = 1 + r.next_below(7); // exercise the multi-word path
    auto c = random_circuit(r, n, 1 + r.next_below(12));
    auto t = circuit_table(c);
    for (std::uint64_t x = 0; x < t.rows(); ++x)
      CHECK(t.get(x) == eval_circuit(c, t.input_of_row(x)));
  }
}

TEST_CASE("encoding length follows the formula exactly") {
  CHECK(circuit_encoding_length(3, 4) == 34);
  CHECK(circuit_encoding_length(2, 6) == 58);
  CHECK(circuit_encoding_length(2, 3) == 25);
  CHECK(circuit_encoding_length(2, 1) == 8);
  auto code = encode_circuit(xor2_circuit());
  CHECK(code.size() == 58);
  rng r(5);
  for (int i = 0; i < 200; ++i) {
    std::uint32_t n = 2 + r.next_below(5);
    auto c = random_circuit(r, n, 1 + r.next_below(10));
    CHECK(encode_circuit(c).size() ==
          circuit_encoding_length(n, c.size()));
  }
}

TEST_CASE("encoded length is nondecreasing in size for fixed n") {
  for (std::uint32_t n : {2u, 3u, 4u, 8u}) {
    for (std::uint64_t s = 1; s < 64; ++s)
      CHECK(circuit_encoding_length(n, s) <=
            circuit_encoding_length(n, s + 1));
  }
}

TEST_CASE("encoded length obeys the 9 s log s bound for s >= n >= 3") {
  for (std::uint32_t n = 3; n <= 6; ++n)
    for (std::uint64_t s = n; s <= 64; ++s) {
      double bound = 9.0 * static_cast<double>(s) *
                     std::log2(static_cast<double>(s));
      CHECK(static_cast<double>(circuit_encoding_length(n, s)) <= bound);
    }
}

TEST_CASE("decode inverts encode on random circuits") {
  rng r(7);
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t n = 2 + r.next_below(4);
    auto c = random_circuit(r, n, 1 + r.next_below(10));
    auto code = encode_circuit(c);
    auto back = decode_circuit(code);
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
}

TEST_CASE("decode rejects malformed strings") {
  CHECK(!decode_circuit(bits("")).has_value());
  CHECK(!decode_circuit(bits("1")).has_value());
  auto code = encode_circuit(xor2_circuit());
  CHECK(!decode_circuit(code.slice(0, code.size() - 1)).has_value());
  bits extended = code;
  extended.push_back(false);
  CHECK(!decode_circuit(extended).has_value());
  // Forward reference: single AND node.
  bits fwd;
  fwd.push_back(false);
  fwd.push_back(true);
  fwd.append_uint(1, 1); // n = 2
  fwd.append(bits::zeros(1));
  fwd.push_back(true);
  fwd.append_uint(1, 2); // label and
  fwd.append_uint(0, 1);
  CHECK(!decode_circuit(fwd).has_value());
}

TEST_CASE("encoder requires n >= 2") {
  CHECK_THROWS_AS(encode_circuit(wire_circuit(1, 0)), std::invalid_argument);
}

TEST_CASE("circuit text format round trips") {
  auto c = xor2_circuit();
  auto back = circuit_from_text(circuit_to_text(c));
  CHECK(back == c);
  // Headerless text infers the input count.
  auto inferred = circuit_from_text("0 INPUT 0\n1 NOT 0\nOUTPUT 1\n");
  CHECK(inferred.declared_input_size == 1);
}

TEST_CASE("enumeration includes the smallest one-input circuits") {
  enumeration_options opt;
  opt.inputs = 1;
  opt.max_vertices = 2;
  std::vector<std::uint64_t> tables;
  enumerate_canonical(opt, [&](const circuit& c, std::uint64_t t) {
    c.validate();
    tables.push_back(t);
    return true;
  });
  // Input(0) then Not(Input(0)).
  REQUIRE(tables.size() == 2);
  CHECK(tables[0] == 0b10);
  CHECK(tables[1] == 0b01);
}

TEST_CASE("exclusive-or first appears at six vertices") {
  const std::uint64_t xor_table = 0b0110;
  enumeration_options opt;
  opt.inputs = 2;
  opt.max_vertices = 4;
  bool found = false;
  enumerate_canonical(opt, [&](const circuit&, std::uint64_t t) {
    if (t == xor_table)
      found = true;
    return !found;
  });
  CHECK(!found);

  opt.max_vertices = 6;
  std::uint32_t found_size = 0;
  enumerate_canonical(opt, [&](const circuit& c, std::uint64_t t) {
    if (t == xor_table) {
      found_size = c.size();
      return false;
    }
    return true;
  });
  CHECK(found_size == 6);
}

TEST_CASE("six vertices realize every function on two inputs") {
  enumeration_options opt;
  opt.inputs = 2;
  opt.max_vertices = 6;
  std::set<std::uint64_t> tables;
  enumerate_canonical(opt, [&](const circuit&, std::uint64_t t) {
    tables.insert(t);
    return true;
  });
  CHECK(tables.size() == 16);
}

TEST_CASE("structural mode yields a superset of the semantic stream") {
  enumeration_options sem;
  sem.inputs = 2;
  sem.max_vertices = 4;
  std::uint64_t sem_count = 0;
  enumerate_canonical(sem, [&](const circuit&, std::uint64_t) {
    ++sem_count;
    return true;
  });
  enumeration_options full = sem;
  full.distinct_node_functions = false;
  std::uint64_t full_count = 0;
  std::set<std::uint64_t> full_tables, sem_tables;
  enumerate_canonical(full, [&](const circuit& c, std::uint64_t t) {
    c.validate();
    ++full_count;
    full_tables.insert(t);
    return true;
  });
  enumerate_canonical(sem, [&](const circuit&, std::uint64_t t) {
    sem_tables.insert(t);
    return true;
  });
  CHECK(full_count >= sem_count);
  CHECK(full_tables == sem_tables);
}

TEST_CASE("enumeration guard rejects oversized requests") {
  enumeration_options opt;
  opt.inputs = 7;
  CHECK_THROWS_AS(enumerate_canonical(opt, [](const circuit&, std::uint64_t) {
                    return true;
                  }),
                  budget_error);
}

TEST_CASE("shannon expansion realizes every three-input function") {
  std::uint32_t max_size = 0;
  for (std::uint32_t word = 0; word < 256; ++word) {
    auto t = truth_table::from_bits(3, word);
    auto c = shannon_build(t);
    CHECK(circuit_table(c) == t);
    max_size = std::max(max_size, c.size());
  }
  // Size stays within a small multiple of 2^n/n.
  CHECK(max_size <= 12 * 8 / 3);
}

TEST_CASE("shannon expansion handles degenerate tables") {
  auto c0 = shannon_build(constant_table(4, false));
  CHECK(circuit_table(c0) == constant_table(4, false));
  CHECK(c0.size() == 3);
  auto cx = shannon_build(parity_table(2));
  CHECK(circuit_table(cx) == parity_table(2));
}

TEST_CASE("shannon expansion matches evaluation on larger tables") {
  rng r(13);
  for (int i = 0; i < 5; ++i) {
    truth_table t(8);
    for (std::uint64_t x = 0; x < t.rows(); ++x)
      t.set(x, r.next_bool());
    auto c = shannon_build(t);
    CHECK(circuit_table(c) == t);
  }
}

TEST_CASE("minimal circuit search finds the exact exclusive-or") {
  auto res = min_circuit_for_table(truth_table::from_bits(2, 0b0110), 1.0,
                                   distribution::uniform(2));
  CHECK(res.size == 6);
  CHECK(res.encoded_length == 58);
  CHECK(circuit_table(res.best).as_word() == 0b0110);
}

TEST_CASE("minimal circuit search under an accuracy floor of one half") {
  // A constant that matches the majority value is enough.
  auto res = min_circuit_for_table(truth_table::from_bits(2, 0b0111), 0.5,
                                   distribution::uniform(2));
  CHECK(res.size <= 3);
  CHECK(res.achieved_accuracy >= 0.5);
}

TEST_CASE("minimal realization of the constants") {
  auto res1 = min_circuit_for_table(constant_table(2, true), 1.0,
                                    distribution::uniform(2));
  CHECK(res1.size == 3);
  CHECK(res1.encoded_length == 25);
  auto res0 = min_circuit_for_table(constant_table(2, false), 1.0,
                                    distribution::uniform(2));
  CHECK(res0.size == 3);
}

TEST_CASE("circuit pool lists minimal sizes in learner order") {
  const auto& pool = circuit_pool::cached(2, 6);
  CHECK(pool.entries().size() == 16);
  const auto* xor_entry = pool.find(0b0110);
  REQUIRE(xor_entry != nullptr);
  CHECK(xor_entry->size == 6);
  CHECK(xor_entry->encoded_length == 58);
  for (std::size_t i = 1; i < pool.entries().size(); ++i)
    CHECK(pool.entries()[i - 1].encoded_length <=
          pool.entries()[i].encoded_length);
}
