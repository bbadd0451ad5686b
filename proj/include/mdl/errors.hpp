#pragma once

#include <stdexcept>

namespace mdl {

// Raised when a request exceeds a configured resource guard; distinct
// from the +infinity result of an exhausted-but-feasible search.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a dataset labels the same input twice with different
// values.
struct inconsistent_dataset_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a search space was exhausted without a feasible result.
struct search_exhausted_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace mdl
