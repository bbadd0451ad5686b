#include "mdl/circuit_search.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "mdl/circuit_builder.hpp"
#include "mdl/circuit_codec.hpp"
#include "mdl/errors.hpp"

namespace mdl {

circuit shannon_build(const truth_table& target) {
  const std::uint32_t n = target.inputs();
  if (n < 1 || n > 16)
    throw budget_error("shannon_build: n out of range");
  std::vector<std::uint8_t> rows(target.rows());
  for (std::uint64_t x = 0; x < target.rows(); ++x)
    rows[x] = target.get(x);
  circuit_builder builder(n);
  std::vector<circuit_builder::wire> args;
  for (std::uint32_t v = 0; v < n; ++v)
    args.push_back(builder.input(v));
  return builder.extract(synthesize_table(builder, rows, args));
}

minimal_circuit_result min_circuit_for_table(const truth_table& target,
                                             double accuracy_floor,
                                             const distribution& dist) {
  const std::uint32_t n = target.inputs();
  if (n > 4)
    throw budget_error("min_circuit_for_table: exhaustive regime is n <= 4");
  enumeration_options opt;
  opt.inputs = n;
  opt.max_vertices = 12;
  minimal_circuit_result res;
  bool found = false;
  enumerate_canonical(opt, [&](const circuit& c, std::uint64_t word) {
    truth_table t(n);
    for (std::uint64_t x = 0; x < t.rows(); ++x)
      t.set(x, (word >> x) & 1u);
    double acc = accuracy(t, target, dist);
    if (acc >= accuracy_floor) {
      res.best = c;
      res.size = c.size();
      res.encoded_length = circuit_encoding_length(n, c.size());
      res.achieved_accuracy = acc;
      found = true;
      return false;
    }
    return true;
  });
  if (!found)
    throw search_exhausted_error(
        "min_circuit_for_table: no circuit reached the accuracy floor");
  return res;
}

circuit_pool::circuit_pool(std::uint32_t inputs, std::uint32_t max_vertices)
    : inputs_(inputs), max_vertices_(max_vertices) {
  enumeration_options opt;
  opt.inputs = inputs;
  opt.max_vertices = max_vertices;
  std::uint64_t order = 0;
  enumerate_canonical(opt, [&](const circuit& c, std::uint64_t table) {
    // Sizes ascend, so the first circuit per table is minimal.
    if (!by_table_.count(table)) {
      entry e;
      e.table = table;
      e.size = c.size();
      e.encoded_length = circuit_encoding_length(inputs_, c.size());
      e.order = order;
      e.realization = c;
      by_table_.emplace(table, entries_.size());
      entries_.push_back(std::move(e));
    }
    ++order;
    return true;
  });
  // Enumeration order is already (size, lex) and the encoded length is
  // nondecreasing in size, so entries_ is sorted as required.
}

const circuit_pool::entry* circuit_pool::find(std::uint64_t table) const {
  auto it = by_table_.find(table);
  return it == by_table_.end() ? nullptr : &entries_[it->second];
}

const circuit_pool& circuit_pool::cached(std::uint32_t inputs,
                                         std::uint32_t max_vertices) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::unique_ptr<circuit_pool>>
      pools;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(inputs, max_vertices);
  auto it = pools.find(key);
  if (it == pools.end())
    it = pools
             .emplace(key,
                      std::make_unique<circuit_pool>(inputs, max_vertices))
             .first;
  return *it->second;
}

} // namespace mdl
