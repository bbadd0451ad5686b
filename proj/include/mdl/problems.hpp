#pragma once

#include "mdl/pac.hpp"

namespace mdl {

// Parity of all n input bits under the uniform distribution.
learning_problem make_parity_problem(std::uint32_t n);

// The first function (tables ordered as 2^n-bit integers, ascending)
// whose cheapest eps-accurate circuit realization costs more than
// 2^n (1 - H(eps)) - 2 bits, under the uniform distribution. At small n
// the threshold is negative or below every realizable length, so the
// first table qualifies; the generator still evaluates the bound.
// Guarded to n <= 3.
learning_problem make_diagonal_problem(std::uint32_t n, double eps);

// g applied to the first ceil(a log2 n) input bits, under the uniform
// distribution on inputs whose remaining bits are zero.
learning_problem make_sparse_problem(std::uint32_t n, double a,
                                     const truth_table& oracle_g);

} // namespace mdl
