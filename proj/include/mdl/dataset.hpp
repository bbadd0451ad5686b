#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mdl/bits.hpp"
#include "mdl/table.hpp"

namespace mdl {

struct sample {
  bits x;
  bool y = false;

  bool operator==(const sample&) const = default;
};

struct dataset {
  std::vector<sample> samples;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }

  // Throws inconsistent_dataset_error naming the offending input when
  // some x carries both labels.
  void validate_consistent() const;
};

// Sampled rows and labels as bitmasks over row indices; inputs must all
// have length n <= 6. Repeated samples collapse.
struct dataset_mask {
  std::uint64_t sampled = 0;
  std::uint64_t labels = 0;

  bool consistent_with(std::uint64_t table) const {
    return ((table ^ labels) & sampled) == 0;
  }
};

dataset_mask make_dataset_mask(const dataset& d, std::uint32_t n);

// One sample per line: <bitstring>,<bit>
std::string dataset_to_text(const dataset& d);
dataset dataset_from_text(std::istream& in);
dataset dataset_from_text(const std::string& text);

} // namespace mdl
