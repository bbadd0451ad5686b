#pragma once

#include "mdl/bits.hpp"
#include "mdl/turing.hpp"

namespace mdl {

// Builds a one-input-tape machine computing T(h, .) from a two-input-tape
// machine T by folding the first tape's head position into the state.
//
// Positions are tracked exactly. Only (state, position) pairs reachable
// from the start under some read sequence get specialized rules, and
// each specialized rule matches exactly one rule of T, so the result
// replays T step for step: same verdict and same step count on every x.
//
// The first tape's head must stay within [-margin, |h|-1+margin] on all
// runs; machines that can wander further are rejected at construction
// time (a finite state set cannot track an unbounded excursion).
//
// Throws std::invalid_argument if T does not have exactly two input
// tapes or h is empty; std::runtime_error if the window is exceeded.
turing_machine hardwire(const turing_machine& t, const bits& h,
                        std::uint32_t margin = 2);

} // namespace mdl
