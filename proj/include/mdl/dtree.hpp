#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdl/circuit.hpp"
#include "mdl/dataset.hpp"

namespace mdl {

// Proper binary decision tree: internal nodes test one variable with
// the first child taken when the variable is one.
struct decision_tree {
  struct node {
    bool leaf = false;
    bool value = false;  // leaves
    std::uint32_t var = 0;
    std::uint32_t child1 = 0; // variable-is-one branch
    std::uint32_t child0 = 0;
  };

  std::vector<node> nodes;
  std::uint32_t root = 0;

  std::uint32_t node_count() const {
    return static_cast<std::uint32_t>(nodes.size());
  }
  std::uint32_t leaf_count() const;
};

// Consistent tree with at most 2m-1 nodes: splits on the lowest-index
// variable on which the current sample set differs, so every split
// strictly partitions the samples and leaves number at most m. Throws
// inconsistent_dataset_error on contradictory samples.
decision_tree fit_tree(const dataset& d);

bool eval_tree(const decision_tree& t, const bits& x);

// Reachability-bit construction: each tree node gets the AND of its
// parent's bit and the branch literal, and a two-register scan over the
// leaves selects the answer of the one reached leaf.
circuit tree_to_circuit(const decision_tree& t, std::uint32_t n);

// fit_tree then tree_to_circuit: a sample-consistent circuit with size
// linear in the sample count.
circuit consistent_circuit(const dataset& d, std::uint32_t n);

std::string tree_debug_dump(const decision_tree& t);

} // namespace mdl
