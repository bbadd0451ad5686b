#pragma once

#include <cstdint>
#include <functional>

#include "mdl/circuit.hpp"

namespace mdl {

struct enumeration_options {
  std::uint32_t inputs = 2;
  std::uint32_t max_vertices = 6;
  // Canonical form: topologically sorted node list with the sink last,
  // ordered and distinct parents on binary gates, and pairwise-distinct
  // node functions. Disabling the last constraint enumerates every
  // structurally canonical list (useful for exhaustive claims over all
  // circuits rather than all functions).
  bool distinct_node_functions = true;
  std::uint64_t step_guard = 400'000'000;
};

// Visits one representative per canonical form, sizes ascending and
// choice-lexicographic within a size (matching the binary encoding's
// label and payload order). The visited circuit reference and its
// truth-table word are only valid during the call. Return false to
// stop. Throws budget_error when the options exceed the exhaustive
// regime (inputs > 6, max_vertices > 16, or the step guard trips).
void enumerate_canonical(
    const enumeration_options& opt,
    const std::function<bool(const circuit&, std::uint64_t table)>& visit);

} // namespace mdl
