#include "mdl/pac.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace mdl {

void pac_params::validate() const {
  if (!(eps > 0 && eps < 0.5))
    throw std::invalid_argument("pac_params: eps must be in (0, 1/2)");
  if (!(delta > 0 && delta < 1))
    throw std::invalid_argument("pac_params: delta must be in (0, 1)");
  if (!(a1 > 0) || !(a2 > 0))
    throw std::invalid_argument("pac_params: constants must be positive");
}

dataset sample_dataset(const learning_problem& p, std::uint64_t m, rng& r) {
  dataset d;
  d.samples.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t row = 0;
    switch (p.dist.k) {
    case distribution::kind::uniform:
      row = r.next_below(std::uint64_t{1} << p.n);
      break;
    case distribution::kind::sparse_support: {
      std::uint64_t prefix = r.next_below(std::uint64_t{1}
                                          << p.dist.prefix_bits);
      row = prefix << (p.n - p.dist.prefix_bits);
      break;
    }
    case distribution::kind::explicit_table: {
      double u = r.next_double();
      double acc = 0;
      row = p.dist.masses.size() - 1;
      for (std::uint64_t x = 0; x < p.dist.masses.size(); ++x) {
        acc += p.dist.masses[x];
        if (u < acc) {
          row = x;
          break;
        }
      }
      break;
    }
    }
    d.samples.push_back({p.target.input_of_row(row), p.target.get(row)});
  }
  return d;
}

double pac_bound_real(const pac_params& params, std::uint64_t length) {
  params.validate();
  return params.a1 / params.eps *
         (std::log2(1.0 / params.delta) + static_cast<double>(length) +
          params.a2);
}

std::uint64_t pac_bound_samples(const pac_params& params,
                                std::uint64_t length) {
  return static_cast<std::uint64_t>(std::ceil(pac_bound_real(params, length)));
}

unsigned worker_count() {
  if (const char* env = std::getenv("MDL_LAB_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1)
      return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Deterministic parallel map: work item i derives its own generator, so
// the outcome vector does not depend on scheduling.
template <typename Fn>
void parallel_trials(std::uint32_t count, const Fn& fn) {
  unsigned workers = std::min<unsigned>(worker_count(), count == 0 ? 1 : count);
  if (workers <= 1) {
    for (std::uint32_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::uint32_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      for (;;) {
        std::uint32_t i = next.fetch_add(1);
        if (i >= count)
          return;
        fn(i);
      }
    });
  for (auto& t : threads)
    t.join();
}

} // namespace

min_samples_estimate
estimate_min_samples(const learner_fn& learner, const learning_problem& p,
                     const pac_params& params, std::uint32_t trials,
                     const std::vector<std::uint64_t>& m_grid,
                     std::uint64_t master_seed) {
  params.validate();
  if (trials < 50)
    throw std::invalid_argument("estimate_min_samples: need >= 50 trials");
  for (std::size_t i = 1; i < m_grid.size(); ++i)
    if (m_grid[i] <= m_grid[i - 1])
      throw std::invalid_argument("estimate_min_samples: grid must increase");

  min_samples_estimate out;
  for (std::size_t gi = 0; gi < m_grid.size(); ++gi) {
    const std::uint64_t m = m_grid[gi];
    std::vector<std::uint8_t> ok(trials, 0);
    parallel_trials(trials, [&](std::uint32_t t) {
      rng r = rng::derive(master_seed, (gi << 32) ^ t);
      dataset d = sample_dataset(p, m, r);
      auto hypothesis = learner(d);
      if (!hypothesis)
        return; // search exhausted: a failed trial
      double acc = accuracy(*hypothesis, p.target, p.dist);
      ok[t] = acc >= 1 - params.eps;
    });
    grid_point gp;
    gp.m = m;
    gp.trials = trials;
    for (auto v : ok)
      gp.successes += v;
    gp.rate = static_cast<double>(gp.successes) / trials;
    gp.ci95 = wilson_interval(gp.successes, trials, kZ95);
    out.points.push_back(gp);
  }

  const double need = 1 - params.delta;
  auto scan = [&](auto value_of) -> std::optional<std::uint64_t> {
    std::optional<std::uint64_t> best;
    for (std::size_t i = out.points.size(); i-- > 0;) {
      if (value_of(out.points[i]) >= need)
        best = out.points[i].m;
      else
        break; // the criterion must hold at every larger tested m
    }
    return best;
  };
  out.estimate = scan([](const grid_point& g) { return g.rate; });
  out.optimistic = scan([](const grid_point& g) { return g.ci95.high; });
  out.conservative = scan([](const grid_point& g) { return g.ci95.low; });
  return out;
}

gain_record measure_gain(const learning_problem& p, const learner_fn& phi,
                         const learner_fn& psi, std::uint64_t length_phi,
                         const pac_params& params, std::uint32_t trials,
                         const std::vector<std::uint64_t>& m_grid,
                         std::uint64_t master_seed) {
  params.validate();
  double cap = std::pow(static_cast<double>(p.n),
                        static_cast<double>(params.d));
  if (static_cast<double>(length_phi) > cap)
    throw std::invalid_argument(
        "measure_gain: description length exceeds n^d, problem rejected");

  gain_record rec;
  rec.n = p.n;
  rec.provenance = p.provenance;
  rec.length_phi = length_phi;
  rec.m_phi = estimate_min_samples(phi, p, params, trials, m_grid,
                                   rng::derive(master_seed, 1).next_u64());
  rec.m_psi = estimate_min_samples(psi, p, params, trials, m_grid,
                                   rng::derive(master_seed, 2).next_u64());
  if (rec.m_phi.estimate && rec.m_psi.estimate) {
    rec.gain = static_cast<double>(*rec.m_psi.estimate) /
               static_cast<double>(*rec.m_phi.estimate);
  }
  if (rec.m_psi.estimate) {
    rec.gain_tilde = static_cast<double>(*rec.m_psi.estimate) /
                     pac_bound_real(params, length_phi);
  }
  return rec;
}

} // namespace mdl
