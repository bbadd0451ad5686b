#pragma once

#include <string>
#include <vector>

#include "mdl/config.hpp"

namespace mdl {

struct run_result {
  bool ok = false;
  std::string error;
  std::vector<std::string> written_files;
};

// Executes a configured experiment and writes its reports (results
// CSV, manifest, and a plot where the experiment produces curves) under
// the configured output directory. Identical configurations and seeds
// produce bit-identical outputs for any worker count. Failures are
// recorded in the manifest and reported in the result rather than
// thrown.
run_result run_experiment(const config_file& cf);

} // namespace mdl
