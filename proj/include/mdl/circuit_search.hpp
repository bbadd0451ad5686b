#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mdl/circuit.hpp"
#include "mdl/circuit_enum.hpp"
#include "mdl/distribution.hpp"
#include "mdl/table.hpp"

namespace mdl {

// Exact realization of a truth table by recursive cofactor expansion
//   f = (x_k and f|x_k=1) or (not x_k and f|x_k=0)
// with shared subfunctions. Works up to n = 16.
circuit shannon_build(const truth_table& target);

struct minimal_circuit_result {
  circuit best;
  std::uint32_t size = 0;
  std::uint64_t encoded_length = 0;
  double achieved_accuracy = 0;
};

// Smallest circuit (by description length, ties by enumeration order)
// whose accuracy against `target` under `dist` reaches accuracy_floor.
// Exhaustive over canonical circuits; guarded to inputs <= 4.
minimal_circuit_result min_circuit_for_table(const truth_table& target,
                                             double accuracy_floor,
                                             const distribution& dist);

// Minimal canonical circuit per realizable truth table, up to a vertex
// cap. Entries are ordered by (encoded length, enumeration order), the
// search order of the description-length learner.
class circuit_pool {
public:
  struct entry {
    std::uint64_t table = 0;
    std::uint32_t size = 0;
    std::uint64_t encoded_length = 0;
    std::uint64_t order = 0;
    circuit realization;
  };

  static const circuit_pool& cached(std::uint32_t inputs,
                                    std::uint32_t max_vertices);

  circuit_pool(std::uint32_t inputs, std::uint32_t max_vertices);

  std::uint32_t inputs() const { return inputs_; }
  std::uint32_t max_vertices() const { return max_vertices_; }

  // Ascending (encoded length, enumeration order).
  const std::vector<entry>& entries() const { return entries_; }

  const entry* find(std::uint64_t table) const;

private:
  std::uint32_t inputs_;
  std::uint32_t max_vertices_;
  std::vector<entry> entries_;
  std::map<std::uint64_t, std::size_t> by_table_;
};

} // namespace mdl
