#include "mdl/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mdl/circuit_codec.hpp"
#include "mdl/ann_convert.hpp"
#include "mdl/circuit_search.hpp"
#include "mdl/errors.hpp"
#include "mdl/interpreter.hpp"
#include "mdl/machine_library.hpp"
#include "mdl/mdl_learner.hpp"
#include "mdl/pac.hpp"
#include "mdl/problems.hpp"
#include "mdl/program_pool.hpp"
#include "mdl/report.hpp"
#include "mdl/tm_compile.hpp"
#include "mdl/vc.hpp"

namespace mdl {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct run_ctx {
  const config_file& cf;
  fs::path outdir;
  std::uint64_t seed = 0;
  std::uint32_t trials = 0;
  std::vector<std::string> files;

  void write_file(const std::string& name, const std::string& content) {
    fs::path p = outdir / name;
    std::ofstream out(p, std::ios::binary);
    if (!out)
      throw std::runtime_error("runner: cannot write " + p.string());
    out << content;
    files.push_back(p.string());
  }
};

learning_problem make_problem(const config_file& cf, std::uint32_t n) {
  auto family = cf.get("problem", "family");
  if (family == "parity")
    return make_parity_problem(n);
  if (family == "diagonal")
    return make_diagonal_problem(n, cf.get_double_or("problem", "eps_gen",
                                                     0.25));
  if (family == "sparse") {
    double a = cf.get_double_or("problem", "a", 1.0);
    auto k = static_cast<std::uint32_t>(
        std::ceil(a * std::log2(static_cast<double>(n))));
    return make_sparse_problem(n, a, parity_table(k));
  }
  throw std::runtime_error("runner: unknown problem family " + family);
}

struct learner_spec {
  interpreter interp;
  std::string label;
  std::uint32_t vertex_cap = 6;
  learner_fn fn;
  // Description length of a target under this interpreter, when
  // computable at desk scale.
  std::function<std::optional<std::uint64_t>(const truth_table&)> length_of;
};

learner_spec make_learner(const config_file& cf, const std::string& section,
                          std::uint32_t n) {
  learner_spec spec;
  auto kind = cf.get(section, "interp");
  if (kind == "poly") {
    spec.interp = interpreter::poly(
        static_cast<std::uint32_t>(cf.get_int_or(section, "c", 2)),
        cf.get_double_or(section, "beta", 1.0));
  } else if (kind == "universal") {
    spec.interp = interpreter::universal(static_cast<std::uint64_t>(
        cf.get_int_or(section, "hard_cap", 1'000'000)));
  } else if (kind == "circuit") {
    spec.interp = interpreter::circuit_interp();
    spec.vertex_cap =
        static_cast<std::uint32_t>(cf.get_int_or(section, "vertex_cap", 6));
  } else {
    throw std::runtime_error("runner: unknown interpreter " + kind);
  }
  spec.label = spec.interp.name();

  if (spec.interp.k == interpreter::kind::circuit) {
    auto cap = spec.vertex_cap;
    spec.fn = [n, cap](const dataset& d) -> std::optional<truth_table> {
      learn_limits lim;
      lim.vertex_cap = cap;
      lim.tree_fallback = true;
      return mdl_learn(interpreter::circuit_interp(), d, n,
                       search_mode::structured_circuit, lim)
          .hypothesis;
    };
    spec.length_of =
        [n, cap](const truth_table& t) -> std::optional<std::uint64_t> {
      const auto& pool = circuit_pool::cached(n, cap);
      if (const auto* e = pool.find(t.as_word()))
        return e->encoded_length;
      return std::nullopt;
    };
  } else {
    auto interp = spec.interp;
    spec.fn = [interp, n](const dataset& d) -> std::optional<truth_table> {
      try {
        return mdl_learn(interp, d, n, search_mode::program_pool).hypothesis;
      } catch (const search_exhausted_error&) {
        return std::nullopt;
      }
    };
    spec.length_of =
        [interp, n](const truth_table& t) -> std::optional<std::uint64_t> {
      for (const auto& prog : machine_program_pool()) {
        auto table = interpret_table(interp, prog.code, n);
        if (table && *table == t)
          return prog.code.size();
      }
      return std::nullopt;
    };
  }
  return spec;
}

pac_params make_params(const config_file& cf) {
  pac_params params;
  params.eps = cf.get_double_or("pac", "eps", 0.25);
  params.delta = cf.get_double_or("pac", "delta", 0.1);
  params.d = static_cast<std::uint32_t>(cf.get_int_or("pac", "d", 4));
  params.validate();
  return params;
}

std::string opt_u64(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "unresolved";
}

void append_estimate_rows(csv_table& results, const std::string& experiment,
                          std::uint32_t n, const std::string& interp,
                          const pac_params& params,
                          const min_samples_estimate& est,
                          std::uint64_t seed) {
  for (const auto& gp : est.points)
    results.add_row({experiment, std::to_string(n), interp,
                     format_double(params.eps), format_double(params.delta),
                     std::to_string(gp.m), format_double(gp.rate),
                     format_double(gp.ci95.low), format_double(gp.ci95.high),
                     std::to_string(seed)});
}

csv_table results_schema() {
  csv_table t;
  t.columns = {"experiment", "n",       "interp", "eps",     "delta",
               "m",          "success_rate", "ci_low", "ci_high", "seed"};
  return t;
}

void run_gain(run_ctx& ctx) {
  const auto n_min =
      static_cast<std::uint32_t>(ctx.cf.get_int("problem", "n_min"));
  const auto n_max =
      static_cast<std::uint32_t>(ctx.cf.get_int("problem", "n_max"));
  if (n_min > n_max)
    throw std::runtime_error("runner: empty n range produces no records");
  auto params = make_params(ctx.cf);
  auto grid = ctx.cf.get_uint_list("grid", "m");
  auto results = results_schema();
  csv_table gains;
  gains.columns = {"n",          "provenance", "interp_phi", "interp_psi",
                   "length_phi", "m_phi",      "m_phi_lo",   "m_phi_hi",
                   "m_psi",      "m_psi_lo",   "m_psi_hi",   "gain",
                   "gain_tilde"};
  plot_series phi_series, psi_series;

  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    auto problem = make_problem(ctx.cf, n);
    auto phi = make_learner(ctx.cf, "phi", n);
    auto psi = make_learner(ctx.cf, "psi", n);
    phi_series.label = phi.label;
    psi_series.label = psi.label;
    auto length = phi.length_of(problem.target);
    if (!length)
      throw search_exhausted_error(
          "runner: description length of the target is not computable "
          "under phi");
    auto rec = measure_gain(problem, phi.fn, psi.fn, *length, params,
                            ctx.trials, grid, rng::derive(ctx.seed, n)
                                                   .next_u64());
    append_estimate_rows(results, "gain", n, phi.label, params, rec.m_phi,
                         ctx.seed);
    append_estimate_rows(results, "gain", n, psi.label, params, rec.m_psi,
                         ctx.seed);
    gains.add_row(
        {std::to_string(n), rec.provenance, phi.label, psi.label,
         std::to_string(rec.length_phi), opt_u64(rec.m_phi.estimate),
         opt_u64(rec.m_phi.optimistic), opt_u64(rec.m_phi.conservative),
         opt_u64(rec.m_psi.estimate), opt_u64(rec.m_psi.optimistic),
         opt_u64(rec.m_psi.conservative),
         rec.gain ? format_double(*rec.gain) : "unresolved",
         rec.gain_tilde ? format_double(*rec.gain_tilde) : "unresolved"});
    if (rec.m_phi.estimate) {
      phi_series.xs.push_back(n);
      phi_series.ys.push_back(static_cast<double>(*rec.m_phi.estimate));
    }
    if (rec.m_psi.estimate) {
      psi_series.xs.push_back(n);
      psi_series.ys.push_back(static_cast<double>(*rec.m_psi.estimate));
    }
  }
  ctx.write_file("results.csv", results.to_string());
  ctx.write_file("gains.csv", gains.to_string());
  ctx.write_file("plot.svg",
                 render_svg_plot("estimated minimal samples", "n",
                                 "samples", {phi_series, psi_series}));
}

void run_bound(run_ctx& ctx) {
  const auto n =
      static_cast<std::uint32_t>(ctx.cf.get_int_or("problem", "n_min", 3));
  auto target_name = ctx.cf.get_or("problem", "target", "const0");
  learning_problem problem;
  problem.n = n;
  problem.dist = distribution::uniform(n);
  problem.provenance = target_name;
  if (target_name == "const0")
    problem.target = constant_table(n, false);
  else if (target_name == "wire")
    problem.target = circuit_table(wire_circuit(n, 0));
  else if (target_name == "and") {
    problem.target = truth_table(n);
    for (std::uint64_t x = 0; x < problem.target.rows(); ++x)
      problem.target.set(x, ((x >> (n - 1)) & 1u) && ((x >> (n - 2)) & 1u));
  } else if (target_name == "parity")
    problem.target = parity_table(n);
  else
    throw std::runtime_error("runner: unknown bound target " + target_name);

  // Exact description length under the circuit interpreter.
  search_limits lim;
  lim.search_cap = ctx.cf.get_int_or("bound", "search_cap", 44);
  auto ic = interpreter::circuit_interp();
  auto dl = min_description_length(ic, problem.target, lim);
  if (!dl.value)
    throw search_exhausted_error("runner: target length not in search cap");

  auto pairs_text = ctx.cf.get_or("bound", "pairs", "0.25:0.1,0.1:0.2");
  auto results = results_schema();
  std::istringstream pin(pairs_text);
  std::string pair;
  while (std::getline(pin, pair, ',')) {
    auto colon = pair.find(':');
    pac_params params = make_params(ctx.cf);
    params.eps = std::stod(pair.substr(0, colon));
    params.delta = std::stod(pair.substr(colon + 1));
    params.validate();
    const std::uint64_t m = pac_bound_samples(params, *dl.value);
    std::uint32_t successes = 0;
    auto learner = make_learner(ctx.cf, "psi", n);
    for (std::uint32_t trial = 0; trial < ctx.trials; ++trial) {
      rng r = rng::derive(ctx.seed,
                          (static_cast<std::uint64_t>(params.eps * 1e6)
                           << 20) ^
                              trial);
      auto d = sample_dataset(problem, m, r);
      auto hypothesis = learner.fn(d);
      if (hypothesis &&
          accuracy(*hypothesis, problem.target, problem.dist) >=
              1 - params.eps)
        ++successes;
    }
    auto ci = wilson_interval(successes, ctx.trials, kZ95);
    results.add_row({"bound", std::to_string(n), learner.label,
                     format_double(params.eps), format_double(params.delta),
                     std::to_string(m),
                     format_double(static_cast<double>(successes) /
                                   ctx.trials),
                     format_double(ci.low), format_double(ci.high),
                     std::to_string(ctx.seed)});
  }
  ctx.write_file("results.csv", results.to_string());
}

void run_compile(run_ctx& ctx) {
  const auto n_min =
      static_cast<std::uint32_t>(ctx.cf.get_int_or("compile", "n_min", 2));
  const auto n_max =
      static_cast<std::uint32_t>(ctx.cf.get_int_or("compile", "n_max", 6));
  csv_table rows;
  rows.columns = {"machine", "n", "t", "rules", "size", "bound_ratio",
                  "verified"};
  const std::vector<std::pair<std::string, turing_machine>> suite = {
      {"parity", parity_scanner_1tape()},
      {"accept", immediate_accept_1tape()},
      {"loop", looping_1tape()},
      {"and", and_all_1tape()},
      {"or", or_all_1tape()},
  };
  for (const auto& [name, machine] : suite)
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
      std::uint64_t t = ctx.cf.get_int_or("compile", "t", 0);
      if (t == 0)
        t = n + 2;
      auto rep = compile_machine(machine, n, t);
      auto check = verify_equivalence(machine, rep.realization, n, t);
      rows.add_row({name, std::to_string(n), std::to_string(t),
                    std::to_string(rep.rule_count),
                    std::to_string(rep.measured_size),
                    format_double(rep.bound_ratio),
                    check.ok ? "yes" : "NO"});
      if (!check.ok)
        throw std::runtime_error("runner: compiled circuit mismatch for " +
                                 name);
    }
  ctx.write_file("results.csv", rows.to_string());
}

void run_convert(run_ctx& ctx) {
  // Measured constants of the circuit <-> network translation over a
  // random corpus, with the operator set taken from the config.
  const auto& os = opset_by_name(ctx.cf.get_or("ann", "opset", "fixed4"));
  const auto count =
      static_cast<std::uint32_t>(ctx.cf.get_int_or("ann", "count", 200));
  rng r(ctx.seed);
  csv_table rows;
  rows.columns = {"direction", "samples", "max_ratio", "mean_ratio"};
  double to_ann_max = 0, to_ann_sum = 0;
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(r.next_below(3));
    truth_table t(n);
    for (std::uint64_t x = 0; x < t.rows(); ++x)
      t.set(x, r.next_bool());
    auto c = shannon_build(t);
    auto a = circuit_to_ann(c, os);
    double ratio =
        static_cast<double>(ann_encoding_length(n, a.size(), os.ops.size())) /
        static_cast<double>(encode_circuit(c).size());
    to_ann_max = std::max(to_ann_max, ratio);
    to_ann_sum += ratio;
  }
  rows.add_row({"circuit-to-ann", std::to_string(count),
                format_double(to_ann_max),
                format_double(to_ann_sum / count)});
  if (os.width <= 6) {
    double to_circ_max = 0, to_circ_sum = 0;
    for (std::uint32_t i = 0; i < count; ++i) {
      std::uint32_t n = 2 + static_cast<std::uint32_t>(r.next_below(2));
      ann a;
      a.declared_input_size = n;
      for (std::uint32_t v = 0; v < n; ++v)
        a.nodes.push_back({true, v, 0, 0});
      for (std::uint32_t g = 0; g < 1 + r.next_below(5); ++g) {
        ann_node nd;
        nd.index = static_cast<std::uint32_t>(r.next_below(os.ops.size()));
        auto arity = os.ops[nd.index].arity;
        auto sz = static_cast<std::uint32_t>(a.nodes.size());
        if (arity >= 1)
          nd.a = static_cast<std::uint32_t>(r.next_below(sz));
        if (arity == 2)
          nd.b = static_cast<std::uint32_t>(r.next_below(sz));
        a.nodes.push_back(nd);
      }
      std::vector<bool> referenced(a.nodes.size(), false);
      for (const auto& nd : a.nodes) {
        if (nd.is_input)
          continue;
        auto arity = os.ops[nd.index].arity;
        if (arity >= 1)
          referenced[nd.a] = true;
        if (arity == 2)
          referenced[nd.b] = true;
      }
      std::vector<std::uint32_t> dangling;
      for (std::uint32_t j = 0; j < a.nodes.size(); ++j)
        if (!referenced[j])
          dangling.push_back(j);
      while (dangling.size() > 1) {
        auto x = dangling.back();
        dangling.pop_back();
        auto y = dangling.back();
        dangling.pop_back();
        a.nodes.push_back({false, os.or_op, x, y});
        dangling.push_back(static_cast<std::uint32_t>(a.nodes.size() - 1));
      }
      a.sink = dangling.front();
      auto conv = ann_to_circuit(a, os);
      double ratio = static_cast<double>(conv.realization.size()) /
                     static_cast<double>(a.size());
      to_circ_max = std::max(to_circ_max, ratio);
      to_circ_sum += ratio;
    }
    rows.add_row({"ann-to-circuit", std::to_string(count),
                  format_double(to_circ_max),
                  format_double(to_circ_sum / count)});
  }
  ctx.write_file("results.csv", rows.to_string());
}

void run_vc(run_ctx& ctx) {
  auto d_list = ctx.cf.get_uint_list("vc", "d");
  csv_table rows;
  rows.columns = {"d", "points", "patterns_checked", "mode", "shattered",
                  "constant"};
  for (auto d : d_list) {
    bool full = d <= 12;
    auto res = vc_lower_bound_demo(static_cast<std::uint32_t>(d), full,
                                   static_cast<std::uint32_t>(
                                       ctx.cf.get_int_or("vc", "samples", 64)),
                                   ctx.seed);
    rows.add_row({std::to_string(res.d), std::to_string(res.num_points),
                  std::to_string(res.patterns_checked),
                  full ? "full" : "sampled", res.shattered ? "yes" : "NO",
                  format_double(res.measured_constant)});
  }
  ctx.write_file("results.csv", rows.to_string());
}

} // namespace

run_result run_experiment(const config_file& cf) {
  run_result out;
  fs::path outdir = cf.get_or("experiment", "outdir", "out");
  json manifest;
  manifest["id"] = cf.get_or("experiment", "id", "unnamed");
  manifest["kind"] = cf.get_or("experiment", "kind", "");
  json resolved;
  for (const auto& [section, kv] : cf.sections()) {
    json s;
    for (const auto& [k, v] : kv)
      s[k] = v;
    resolved[section.empty() ? "(top)" : section] = s;
  }
  manifest["config"] = resolved;

  try {
    fs::create_directories(outdir);
    run_ctx ctx{cf, outdir, 0, 0, {}};
    if (!cf.has("experiment", "seed"))
      throw std::runtime_error(
          "runner: a seed is mandatory; refusing wall-clock defaults");
    ctx.seed = static_cast<std::uint64_t>(cf.get_int("experiment", "seed"));
    ctx.trials = static_cast<std::uint32_t>(
        cf.get_int_or("experiment", "trials", 200));
    manifest["seed"] = ctx.seed;
    manifest["trials"] = ctx.trials;

    auto kind = cf.get("experiment", "kind");
    if (kind == "gain")
      run_gain(ctx);
    else if (kind == "bound")
      run_bound(ctx);
    else if (kind == "compile")
      run_compile(ctx);
    else if (kind == "vc")
      run_vc(ctx);
    else if (kind == "convert")
      run_convert(ctx);
    else
      throw std::runtime_error("runner: unknown experiment kind " + kind);

    manifest["status"] = "ok";
    manifest["files"] = ctx.files;
    out.ok = true;
    out.written_files = ctx.files;
  } catch (const std::exception& e) {
    manifest["status"] = "error";
    manifest["error"] = e.what();
    out.ok = false;
    out.error = e.what();
  }

  std::ofstream mf(outdir / "manifest.json");
  mf << manifest.dump(2) << "\n";
  out.written_files.push_back((outdir / "manifest.json").string());
  return out;
}

} // namespace mdl
