// Command-line front end: experiment runner plus direct access to the
// simulator, the compiler, the learners, and the shattering demo.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mdl/circuit_codec.hpp"
#include "mdl/config.hpp"
#include "mdl/dataset.hpp"
#include "mdl/errors.hpp"
#include "mdl/interpreter.hpp"
#include "mdl/machine_library.hpp"
#include "mdl/mdl_learner.hpp"
#include "mdl/pac.hpp"
#include "mdl/problems.hpp"
#include "mdl/program_pool.hpp"
#include "mdl/report.hpp"
#include "mdl/runner.hpp"
#include "mdl/tm_compile.hpp"
#include "mdl/turing_codec.hpp"
#include "mdl/vc.hpp"

namespace {

using namespace mdl;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << content;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  auto s = read_file(path);
  return {s.begin(), s.end()};
}

turing_machine load_machine(const std::string& path, std::uint32_t k1,
                            std::uint32_t k2) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".bin") {
    auto code = bits::from_padded_bytes(read_bytes(path));
    auto dec = decode_machine(code, k1, k2);
    if (!dec)
      throw std::runtime_error("machine binary does not decode");
    return dec->machine;
  }
  std::istringstream in(read_file(path));
  return machine_from_text(in);
}

circuit load_circuit(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".bin") {
    auto code = bits::from_padded_bytes(read_bytes(path));
    auto dec = decode_circuit(code);
    if (!dec)
      throw std::runtime_error("circuit binary does not decode");
    return *dec;
  }
  std::istringstream in(read_file(path));
  return circuit_from_text(in);
}

interpreter interp_from_flags(const std::string& name, std::uint32_t c,
                              double beta, std::uint64_t hard_cap) {
  if (name == "circuit")
    return interpreter::circuit_interp();
  if (name == "universal")
    return interpreter::universal(hard_cap);
  if (name == "poly")
    return interpreter::poly(c, beta);
  throw std::runtime_error("unknown interpreter: " + name);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"description-length learning laboratory"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run a configured experiment");
  std::string config_path;
  run->add_option("--config", config_path, "experiment configuration file")
      ->required();

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a machine on inputs");
  std::string sim_machine, sim_input, sim_input2;
  std::uint64_t sim_budget = 1'000'000;
  std::uint32_t sim_k1 = 1, sim_k2 = 0;
  sim->add_option("--machine", sim_machine, "machine file (.txt or .bin)")
      ->required();
  sim->add_option("--input", sim_input, "first input tape")->required();
  sim->add_option("--input2", sim_input2, "second input tape");
  sim->add_option("--budget", sim_budget, "step budget");
  sim->add_option("--k1", sim_k1, "input tapes for binary decode");
  sim->add_option("--k2", sim_k2, "work tapes for binary decode");

  // compile
  auto* comp = app.add_subcommand("compile", "unroll a machine run into a "
                                             "circuit");
  std::string comp_machine, comp_out;
  std::uint32_t comp_n = 3;
  std::uint64_t comp_t = 8;
  comp->add_option("--machine", comp_machine)->required();
  comp->add_option("--n", comp_n, "input size")->required();
  comp->add_option("--t", comp_t, "step bound")->required();
  comp->add_option("--out", comp_out, "output circuit file");

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate a circuit on an input");
  std::string ev_circuit, ev_input;
  ev->add_option("--circuit", ev_circuit, "circuit file (.txt or .bin)")
      ->required();
  ev->add_option("--input", ev_input, "input bits")->required();

  // learn
  auto* learn = app.add_subcommand("learn", "shortest consistent program");
  std::string learn_interp = "circuit", learn_dataset, learn_out,
              learn_mode = "auto";
  std::uint32_t learn_n = 2, learn_c = 2;
  double learn_beta = 1.0;
  std::uint64_t learn_hard_cap = 1'000'000, learn_search_cap = 64;
  learn->add_option("--interp", learn_interp, "circuit|universal|poly");
  learn->add_option("--dataset", learn_dataset)->required();
  learn->add_option("--n", learn_n)->required();
  learn->add_option("--c", learn_c, "poly exponent");
  learn->add_option("--beta", learn_beta, "poly scale");
  learn->add_option("--hard-cap", learn_hard_cap, "universal step ceiling");
  learn->add_option("--search-cap", learn_search_cap, "raw search bits");
  learn->add_option("--mode", learn_mode, "auto|raw|structured|pool");
  learn->add_option("--out", learn_out, "write program bits here");

  // measure
  auto* measure = app.add_subcommand("measure", "estimate minimal samples");
  std::string measure_problem = "parity";
  std::uint32_t measure_n = 3, measure_trials = 200, measure_c = 2;
  double measure_eps = 0.25, measure_delta = 0.2;
  std::uint64_t measure_seed = 1;
  std::string measure_interp = "poly";
  measure->add_option("--problem", measure_problem, "parity|diagonal");
  measure->add_option("--n", measure_n);
  measure->add_option("--interp", measure_interp,
                      "circuit|universal|poly");
  measure->add_option("--c", measure_c);
  measure->add_option("--eps", measure_eps);
  measure->add_option("--delta", measure_delta);
  measure->add_option("--trials", measure_trials);
  measure->add_option("--seed", measure_seed);

  // vc
  auto* vc = app.add_subcommand("vc", "indexer-family shattering demo");
  std::uint32_t vc_d = 8, vc_samples = 64;
  std::uint64_t vc_seed = 1;
  bool vc_full = false;
  vc->add_option("--d", vc_d);
  vc->add_flag("--full", vc_full, "check all patterns");
  vc->add_option("--samples", vc_samples);
  vc->add_option("--seed", vc_seed);

  // encode/decode helpers
  auto* enc = app.add_subcommand("encode-machine",
                                 "machine text to prefix-free binary");
  std::string enc_in, enc_out;
  enc->add_option("--in", enc_in)->required();
  enc->add_option("--out", enc_out)->required();
  auto* dec = app.add_subcommand("decode-machine",
                                 "prefix-free binary to machine text");
  std::string dec_in;
  std::uint32_t dec_k1 = 2, dec_k2 = 1;
  dec->add_option("--in", dec_in)->required();
  dec->add_option("--k1", dec_k1);
  dec->add_option("--k2", dec_k2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      auto cf = config_file::load(config_path);
      auto res = run_experiment(cf);
      for (const auto& f : res.written_files)
        std::cout << "wrote " << f << "\n";
      if (!res.ok) {
        std::cerr << "error: " << res.error << "\n";
        return 1;
      }
      return 0;
    }
    if (*sim) {
      auto m = load_machine(sim_machine, sim_k1, sim_k2);
      std::vector<bits> inputs;
      inputs.emplace_back(sim_input);
      if (m.num_input_tapes == 2)
        inputs.emplace_back(sim_input2);
      auto out = simulate(m, inputs, sim_budget);
      const char* verdicts[] = {"1", "0", "bottom"};
      const char* reasons[] = {"accept", "reject", "no-rule",
                               "budget-exhausted"};
      std::cout << "verdict " << verdicts[static_cast<int>(out.result)]
                << " steps " << out.steps_used << " reason "
                << reasons[static_cast<int>(out.reason)] << "\n";
      return 0;
    }
    if (*comp) {
      auto m = load_machine(comp_machine, 1, 0);
      auto rep = compile_machine(m, comp_n, comp_t);
      auto check = verify_equivalence(m, rep.realization, comp_n, comp_t);
      if (!comp_out.empty()) {
        if (comp_out.size() > 4 &&
            comp_out.substr(comp_out.size() - 4) == ".bin") {
          auto bytes = encode_circuit(rep.realization).to_padded_bytes();
          write_file(comp_out,
                     std::string(bytes.begin(), bytes.end()));
        } else {
          write_file(comp_out, circuit_to_text(rep.realization));
        }
      }
      std::cout << "machine,n,t,rules,size,bound_ratio,verified\n"
                << comp_machine << "," << comp_n << "," << comp_t << ","
                << rep.rule_count << "," << rep.measured_size << ","
                << format_double(rep.bound_ratio) << ","
                << (check.ok ? "yes" : "NO") << "\n";
      return check.ok ? 0 : 1;
    }
    if (*ev) {
      auto c = load_circuit(ev_circuit);
      std::cout << (eval_circuit(c, bits(ev_input)) ? 1 : 0) << "\n";
      return 0;
    }
    if (*learn) {
      auto d = dataset_from_text(read_file(learn_dataset));
      auto interp =
          interp_from_flags(learn_interp, learn_c, learn_beta,
                            learn_hard_cap);
      search_mode mode;
      if (learn_mode == "auto")
        mode = interp.k == interpreter::kind::circuit
                   ? search_mode::structured_circuit
                   : search_mode::program_pool;
      else if (learn_mode == "raw")
        mode = search_mode::raw_bitstring;
      else if (learn_mode == "structured")
        mode = search_mode::structured_circuit;
      else if (learn_mode == "pool")
        mode = search_mode::program_pool;
      else
        throw std::runtime_error("unknown mode " + learn_mode);
      learn_limits lim;
      lim.search_cap = learn_search_cap;
      lim.tree_fallback = true;
      auto res = mdl_learn(interp, d, learn_n, mode, lim);
      if (!learn_out.empty()) {
        auto bytes = res.program.to_padded_bytes();
        write_file(learn_out, std::string(bytes.begin(), bytes.end()));
      }
      std::cout << "interp,mode,length,fallback,program\n"
                << interp.name() << "," << learn_mode << "," << res.length
                << "," << (res.from_fallback ? "yes" : "no") << ","
                << res.program.to_string() << "\n";
      return 0;
    }
    if (*measure) {
      learning_problem problem = measure_problem == "parity"
                                     ? make_parity_problem(measure_n)
                                     : make_diagonal_problem(measure_n, 0.25);
      pac_params params;
      params.eps = measure_eps;
      params.delta = measure_delta;
      auto interp = interp_from_flags(measure_interp, measure_c, 1.0,
                                      1'000'000);
      learner_fn fn;
      if (interp.k == interpreter::kind::circuit) {
        fn = [measure_n](const dataset& d) -> std::optional<truth_table> {
          learn_limits lim;
          lim.tree_fallback = true;
          return mdl_learn(interpreter::circuit_interp(), d, measure_n,
                           search_mode::structured_circuit, lim)
              .hypothesis;
        };
      } else {
        fn = [interp, measure_n](const dataset& d)
            -> std::optional<truth_table> {
          try {
            return mdl_learn(interp, d, measure_n, search_mode::program_pool)
                .hypothesis;
          } catch (const search_exhausted_error&) {
            return std::nullopt;
          }
        };
      }
      std::vector<std::uint64_t> grid = {1, 2, 4, 6, 8, 12, 16, 24, 32, 48,
                                         64, 96};
      auto est = estimate_min_samples(fn, problem, params, measure_trials,
                                      grid, measure_seed);
      std::cout << "m,success_rate,ci_low,ci_high\n";
      for (const auto& gp : est.points)
        std::cout << gp.m << "," << format_double(gp.rate) << ","
                  << format_double(gp.ci95.low) << ","
                  << format_double(gp.ci95.high) << "\n";
      std::cout << "estimate "
                << (est.estimate ? std::to_string(*est.estimate)
                                 : std::string("unresolved"))
                << "\n";
      return 0;
    }
    if (*vc) {
      auto res = vc_lower_bound_demo(vc_d, vc_full, vc_samples, vc_seed);
      std::cout << "d " << res.d << " points " << res.num_points
                << " patterns " << res.patterns_checked << " shattered "
                << (res.shattered ? "yes" : "NO") << " constant "
                << format_double(res.measured_constant) << "\n";
      return res.shattered ? 0 : 1;
    }
    if (*enc) {
      std::istringstream in(read_file(enc_in));
      auto m = machine_from_text(in);
      auto bytes = encode_machine(m).to_padded_bytes();
      write_file(enc_out, std::string(bytes.begin(), bytes.end()));
      std::cout << "wrote " << enc_out << " ("
                << encode_machine(m).size() << " bits)\n";
      return 0;
    }
    if (*dec) {
      auto code = bits::from_padded_bytes(read_bytes(dec_in));
      auto m = decode_machine(code, dec_k1, dec_k2);
      if (!m) {
        std::cerr << "error: binary does not decode\n";
        return 1;
      }
      std::cout << machine_to_text(m->machine);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
