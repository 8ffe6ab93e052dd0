#pragma once

#include <string>
#include <utility>
#include <vector>

#include "afc/config.hpp"

namespace afc {

struct RunOutput {
  // (file name, file contents) in deterministic order
  std::vector<std::pair<std::string, std::string>> files;
  std::vector<std::string> warnings;
};

// Dispatch on config.experiment. Sweep points are evaluated by a worker pool
// of `threads` threads; rows land in sweep order regardless of scheduling.
RunOutput run_experiment(const ExperimentConfig& config, int threads = 1);

// Write every produced file plus manifest.txt (the fully-resolved config,
// re-runnable, with content checksums) into out_dir.
void write_outputs(const RunOutput& out, const ExperimentConfig& config,
                   const std::string& out_dir);

}  // namespace afc
