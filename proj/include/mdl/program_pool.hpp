#pragma once

#include <string>
#include <vector>

#include "mdl/bits.hpp"
#include "mdl/turing.hpp"

namespace mdl {

// Registered machine programs for the universal interpreters, ordered
// by (code length, lexicographic). Blind enumeration of machine codes
// is infeasible past a few dozen bits (the parity program alone is 155
// bits), so the machine-interpreter learner searches this library; the
// returned program is still the shortest consistent total one within
// its search space.
struct pool_program {
  std::string name;
  bits code; // E(T) with an empty payload
};

const std::vector<pool_program>& machine_program_pool();

} // namespace mdl
