#pragma once

#include <string>

#include "sawtooth/config.hpp"
#include "sawtooth/results.hpp"

namespace sawtooth {

// Runs the configured experiment; pure given the config (worker count never
// changes the produced rows).
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

// Writes <out>/<experiment>.csv, optional <experiment>.svg, artifacts, and
// <out>/manifest.json. Returns the CSV path.
std::string write_outputs(const ExperimentConfig& cfg,
                          const ExperimentOutput& out);

// Acceptance-style assertions tied to an experiment's rows (used by the CLI
// --assert flag and by the acceptance suite).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};
std::vector<CheckResult> acceptance_checks(const ExperimentConfig& cfg,
                                           const std::vector<ResultRow>& rows);

}  // namespace sawtooth
