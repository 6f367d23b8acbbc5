#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sawtooth {

// One aggregated measurement. value_db is derived on output; exact zeros
// render as an empty dB field.
struct ResultRow {
  std::string experiment;
  std::string sweep_name;
  double sweep_value = 0.0;
  std::string estimator;  // PCP | LGS | GGS | CRLB | EPS_LIMIT | EVENT_SIM | SCAN
  std::string metric;     // mse_rho_m2 | mse_fd_Hz2 | mse_phase_rad2 | ...
  double value = 0.0;     // linear units
  int reps = 0;
  uint64_t seed = 0;
  double sem = 0.0;  // standard error of the mean of squared errors
};

// Header: experiment,sweep_name,sweep_value,estimator,metric,value,value_db,
// reps,seed,sem
std::string rows_to_csv(const std::vector<ResultRow>& rows);

// Mean and standard error of the mean.
struct MeanSem {
  double mean = 0.0;
  double sem = 0.0;
};
MeanSem mean_sem(const std::vector<double>& xs);

struct ExperimentOutput {
  std::vector<ResultRow> rows;
  // extra files keyed by name (rep dumps, density/event-trace CSVs, SVGs)
  std::map<std::string, std::string> artifacts;
};

}  // namespace sawtooth
