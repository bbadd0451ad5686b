#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdl/dataset.hpp"
#include "mdl/distribution.hpp"
#include "mdl/rng.hpp"
#include "mdl/stats.hpp"
#include "mdl/table.hpp"

namespace mdl {

struct learning_problem {
  std::uint32_t n = 0;
  truth_table target;
  distribution dist;
  std::string provenance;
};

// Sample-bound constants: with a1 = ln 2 and a2 = 1 the bound
//   (a1/eps) * (log2(1/delta) + L + a2)
// equals the union-bound form (1/eps)(ln(1/delta) + (L+1) ln 2) for a
// class of at most 2^(L+1) - 1 programs.
struct pac_params {
  double eps = 0.25;
  double delta = 0.1;
  double a1 = 0.6931471805599453;
  double a2 = 1.0;
  std::uint32_t d = 4; // description-length cap exponent: |f| <= n^d

  void validate() const;
};

// m labeled draws, i.i.d. from the problem distribution.
dataset sample_dataset(const learning_problem& p, std::uint64_t m, rng& r);

double pac_bound_real(const pac_params& params, std::uint64_t length);
std::uint64_t pac_bound_samples(const pac_params& params,
                                std::uint64_t length);

// A learner maps a dataset to a hypothesis; nullopt = search exhausted,
// recorded as a failed trial.
using learner_fn = std::function<std::optional<truth_table>(const dataset&)>;

struct grid_point {
  std::uint64_t m = 0;
  std::uint32_t successes = 0;
  std::uint32_t trials = 0;
  double rate = 0;
  interval ci95;
};

// The minimal-samples estimator approximates the "at m and every larger
// m" quantifier on the tested grid: the estimate at m requires the
// success criterion to hold there and at every larger grid point.
// Optimistic/conservative variants apply the same rule to the Wilson
// 95% upper/lower bounds, giving an interval for the estimate itself.
struct min_samples_estimate {
  std::vector<grid_point> points;
  std::optional<std::uint64_t> estimate;
  std::optional<std::uint64_t> optimistic;
  std::optional<std::uint64_t> conservative;
};

min_samples_estimate
estimate_min_samples(const learner_fn& learner, const learning_problem& p,
                     const pac_params& params, std::uint32_t trials,
                     const std::vector<std::uint64_t>& m_grid,
                     std::uint64_t master_seed);

struct gain_record {
  std::uint32_t n = 0;
  std::string provenance;
  min_samples_estimate m_phi;
  min_samples_estimate m_psi;
  std::uint64_t length_phi = 0;
  // m_psi / m_phi and m_psi over the bound denominator; empty until
  // both estimates resolve.
  std::optional<double> gain;
  std::optional<double> gain_tilde;
};

// Rejects problems whose phi-description length exceeds n^d.
gain_record measure_gain(const learning_problem& p, const learner_fn& phi,
                         const learner_fn& psi, std::uint64_t length_phi,
                         const pac_params& params, std::uint32_t trials,
                         const std::vector<std::uint64_t>& m_grid,
                         std::uint64_t master_seed);

// Worker count for trial-level parallelism; per-trial seeding keeps
// results identical for any value. Reads MDL_LAB_WORKERS, defaulting to
// the hardware concurrency.
unsigned worker_count();

} // namespace mdl
