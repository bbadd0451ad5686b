#include "mdl/problems.hpp"

#include <cmath>
#include <stdexcept>

#include "mdl/circuit_search.hpp"
#include "mdl/entropy.hpp"
#include "mdl/errors.hpp"

namespace mdl {

learning_problem make_parity_problem(std::uint32_t n) {
  learning_problem p;
  p.n = n;
  p.target = parity_table(n);
  p.dist = distribution::uniform(n);
  p.provenance = "parity(n=" + std::to_string(n) + ")";
  return p;
}

learning_problem make_diagonal_problem(std::uint32_t n, double eps) {
  if (n > 3)
    throw budget_error("make_diagonal_problem: needs n <= 3");
  if (!(eps > 0 && eps < 0.5))
    throw std::invalid_argument("make_diagonal_problem: eps in (0, 1/2)");
  const double threshold =
      std::ldexp(1.0, static_cast<int>(n)) * (1 - binary_entropy(eps)) - 2;
  const std::uint64_t count = std::uint64_t{1}
                              << (std::uint64_t{1} << n);
  auto dist = distribution::uniform(n);
  for (std::uint64_t word = 0; word < count; ++word) {
    auto f = truth_table::from_bits(n, word);
    auto best = min_circuit_for_table(f, 1 - eps, dist);
    if (static_cast<double>(best.encoded_length) > threshold) {
      learning_problem p;
      p.n = n;
      p.target = f;
      p.dist = dist;
      p.provenance = "diagonal(n=" + std::to_string(n) + ")";
      return p;
    }
  }
  throw std::logic_error(
      "make_diagonal_problem: every function was cheaply approximable");
}

learning_problem make_sparse_problem(std::uint32_t n, double a,
                                     const truth_table& oracle_g) {
  if (n < 2)
    throw std::invalid_argument("make_sparse_problem: n too small");
  auto k = static_cast<std::uint32_t>(
      std::ceil(a * std::log2(static_cast<double>(n))));
  if (k == 0 || k > n)
    throw std::invalid_argument("make_sparse_problem: bad prefix width");
  if (oracle_g.inputs() != k)
    throw std::invalid_argument(
        "make_sparse_problem: oracle must take ceil(a log2 n) bits");
  learning_problem p;
  p.n = n;
  p.target = truth_table(n);
  for (std::uint64_t x = 0; x < p.target.rows(); ++x)
    p.target.set(x, oracle_g.get(x >> (n - k)));
  p.dist = distribution::sparse(n, k);
  p.provenance = "sparse(n=" + std::to_string(n) +
                 ",prefix=" + std::to_string(k) + ")";
  return p;
}

} // namespace mdl
