#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdl/bits.hpp"
#include "mdl/turing.hpp"

namespace mdl {

// Hand-built machines used by the compiler suite, the interpreter
// program pool, and the shattering demo. All use canonical state ids
// (0 = initial, 1 = accept, 2 = reject).

// --- one-input-tape machines (compiler suite) ---

// Scans its input once; accepts iff the number of ones is odd.
// 4 states, 6 rules.
turing_machine parity_scanner_1tape();

// Accepts on the first step whatever the first symbol is.
turing_machine immediate_accept_1tape();

// Moves right forever; never halts.
turing_machine looping_1tape();

// Accepts iff every input bit is one / at least one bit is one.
turing_machine and_all_1tape();
turing_machine or_all_1tape();

// --- two-input-tape machines (programs for the universal
// interpreters; decoded with k1=2, k2=1) ---

// No rules at all: bottom under the unbounded interpreter, constant 0
// under the time-limited one. Its encoding is the shortest valid
// machine code (5 bits).
turing_machine stuck_2tape();

// Constant functions and single-bit readers of the second input.
turing_machine const1_2tape();
turing_machine first_bit_2tape();
turing_machine not_first_bit_2tape();
turing_machine and_all_2tape();
turing_machine or_all_2tape();
turing_machine nth_bit_2tape(std::uint32_t index);

// Parity of the second input, tracked on the work tape; input-size
// independent. 3 states, 6 rules.
turing_machine parity_2tape();

// Parity of the concatenation (first input . second input).
turing_machine concat_parity_2tape();

// Reads the first input's bit selected by the second input: with
// u on tape one and x read as a binary number j, accepts iff u_j = 1;
// rejects when j is at or past the end of u. Built for a fixed x size.
turing_machine indexer_2tape(std::uint32_t x_bits);

// Moves right forever on both tapes.
turing_machine looping_2tape();

// Outputs the first bit of its first input, ignoring the second.
turing_machine first_program_bit_2tape();

} // namespace mdl
