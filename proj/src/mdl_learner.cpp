#include "mdl/mdl_learner.hpp"

#include <map>
#include <mutex>

#include "mdl/circuit_codec.hpp"
#include "mdl/circuit_search.hpp"
#include "mdl/dtree.hpp"
#include "mdl/errors.hpp"
#include "mdl/program_pool.hpp"

namespace mdl {

bool is_consistent(const interpreter& interp, const bits& program,
                   const dataset& d) {
  for (const auto& s : d.samples) {
    trit v = interpret(interp, program, s.x);
    if (v == trit::bottom || (v == trit::one) != s.y)
      return false;
  }
  return true;
}

bool is_total(const interpreter& interp, const bits& program,
              std::uint32_t n) {
  return interpret_table(interp, program, n).has_value();
}

namespace {

truth_table table_from_word(std::uint32_t n, std::uint64_t word) {
  truth_table t(n);
  for (std::uint64_t x = 0; x < t.rows(); ++x)
    t.set(x, (word >> x) & 1u);
  return t;
}

// Pool program hypothesis tables per interpreter configuration; the
// estimator loops over thousands of datasets with the same few
// programs, so these are worth keeping.
const std::vector<std::optional<truth_table>>&
pool_tables(const interpreter& interp, std::uint32_t n) {
  using key_t = std::tuple<int, std::uint64_t, std::uint32_t, std::uint64_t,
                           std::uint32_t, std::uint32_t>;
  static std::mutex mu;
  static std::map<key_t, std::vector<std::optional<truth_table>>> cache;
  key_t key{static_cast<int>(interp.k),
            interp.hard_cap,
            interp.c,
            static_cast<std::uint64_t>(interp.beta * 4096),
            interp.work_tapes,
            n};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<std::optional<truth_table>> tables;
    for (const auto& prog : machine_program_pool())
      tables.push_back(interpret_table(interp, prog.code, n));
    it = cache.emplace(key, std::move(tables)).first;
  }
  return it->second;
}

mdl_result learn_structured(const interpreter& interp, const dataset& d,
                            std::uint32_t n, const learn_limits& lim) {
  if (interp.k != interpreter::kind::circuit)
    throw std::invalid_argument(
        "mdl_learn: structured mode is for the circuit interpreter");
  if (n > 6)
    throw budget_error("mdl_learn: structured mode needs n <= 6");
  auto mask = make_dataset_mask(d, n);
  const auto& pool = circuit_pool::cached(n, lim.vertex_cap);
  for (const auto& e : pool.entries()) {
    if (mask.consistent_with(e.table)) {
      mdl_result res;
      res.program = encode_circuit(e.realization);
      res.length = res.program.size();
      res.hypothesis = table_from_word(n, e.table);
      res.mode = search_mode::structured_circuit;
      return res;
    }
  }
  if (lim.tree_fallback && !d.empty()) {
    circuit c = consistent_circuit(d, n);
    mdl_result res;
    res.program = encode_circuit(c);
    res.length = res.program.size();
    res.hypothesis = circuit_table(c);
    res.mode = search_mode::structured_circuit;
    res.from_fallback = true;
    return res;
  }
  throw search_exhausted_error(
      "mdl_learn: no consistent circuit within the vertex cap");
}

mdl_result learn_pool(const interpreter& interp, const dataset& d,
                      std::uint32_t n) {
  if (interp.k != interpreter::kind::universal &&
      interp.k != interpreter::kind::poly)
    throw std::invalid_argument(
        "mdl_learn: pool mode is for the machine interpreters");
  const auto& pool = machine_program_pool();
  const auto& tables = pool_tables(interp, n);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!tables[i])
      continue; // not total on this input size
    bool ok = true;
    for (const auto& s : d.samples) {
      if (tables[i]->get(truth_table::row_of_input(s.x)) != s.y) {
        ok = false;
        break;
      }
    }
    if (ok) {
      mdl_result res;
      res.program = pool[i].code;
      res.length = res.program.size();
      res.hypothesis = *tables[i];
      res.mode = search_mode::program_pool;
      return res;
    }
  }
  throw search_exhausted_error(
      "mdl_learn: no pool program is consistent with the dataset");
}

// The same lexicographic successor as the blind description-length
// search.
bool next_lex(bits& b) {
  for (std::size_t i = b.size(); i-- > 0;) {
    if (!b[i]) {
      bits out;
      for (std::size_t j = 0; j < i; ++j)
        out.push_back(b[j]);
      out.push_back(true);
      while (out.size() < b.size())
        out.push_back(false);
      b = out;
      return true;
    }
  }
  return false;
}

mdl_result learn_raw(const interpreter& interp, const dataset& d,
                     std::uint32_t n, const learn_limits& lim) {
  std::uint64_t cap = lim.search_cap;
  if (interp.k == interpreter::kind::poly)
    cap = std::min(cap, interp.poly_budget(n));

  if (interp.k == interpreter::kind::circuit) {
    if (n > 6)
      throw budget_error("mdl_learn: raw circuit mode needs n <= 6");
    auto mask = make_dataset_mask(d, n);
    std::uint64_t steps = 0;
    for (std::uint32_t size = 1; circuit_encoding_length(n, size) <= cap;
         ++size) {
      std::optional<mdl_result> found;
      for_each_decodable_circuit(
          n, size, &steps, lim.max_candidates,
          [&](const circuit& c, std::uint64_t word) {
            if (mask.consistent_with(word)) {
              mdl_result res;
              res.program = encode_circuit(c);
              res.length = res.program.size();
              res.hypothesis = table_from_word(n, word);
              res.mode = search_mode::raw_bitstring;
              found = std::move(res);
              return false;
            }
            return true;
          });
      if (found)
        return *found;
    }
    throw search_exhausted_error(
        "mdl_learn: no consistent circuit program within the cap");
  }

  if (cap >= 40 || ((std::uint64_t{1} << (cap + 1)) > lim.max_candidates))
    throw budget_error("mdl_learn: raw enumeration over 2^" +
                       std::to_string(cap + 1) +
                       " programs exceeds the candidate guard");
  for (std::uint64_t len = 0; len <= cap; ++len) {
    bits candidate = bits::zeros(len);
    for (;;) {
      if (is_consistent(interp, candidate, d)) {
        auto t = interpret_table(interp, candidate, n);
        if (t) {
          mdl_result res;
          res.program = candidate;
          res.length = len;
          res.hypothesis = *t;
          res.mode = search_mode::raw_bitstring;
          return res;
        }
      }
      if (!next_lex(candidate))
        break;
    }
  }
  throw search_exhausted_error("mdl_learn: raw search cap exhausted");
}

} // namespace

mdl_result mdl_learn(const interpreter& interp, const dataset& d,
                     std::uint32_t n, search_mode mode,
                     const learn_limits& lim) {
  d.validate_consistent();
  for (const auto& s : d.samples)
    if (s.x.size() != n)
      throw std::invalid_argument("mdl_learn: sample length differs from n");
  switch (mode) {
  case search_mode::structured_circuit:
    return learn_structured(interp, d, n, lim);
  case search_mode::program_pool:
    return learn_pool(interp, d, n);
  default:
    return learn_raw(interp, d, n, lim);
  }
}

} // namespace mdl
