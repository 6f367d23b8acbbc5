#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sawtooth/estimators.hpp"
#include "sawtooth/params.hpp"

namespace sawtooth {

enum class Experiment {
  vs_fd,
  vs_phase,
  vs_N,
  vs_snr,
  epsilon_plateau,
  theorem1_check,
  identifiability_scan,
};

const char* experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

// Physical and simulation defaults (Table-I values) plus randomization
// ranges.
struct TableParams {
  int N = 2000;             // sample size
  double delta0 = 5e-6;     // response delay [s]
  double T_M = 1e-8;        // master period [s]
  double T_samp = 1e-4;     // sampling period [s]
  double c = 3e8;           // propagation speed [m/s]
  Range rho{1.0, 3.0};      // range [m]
  Range f_d{-200.0, 200.0}; // frequency difference [Hz]
  Range phi_S{0.0, two_pi}; // slave phase [rad]
  double snr_in_db = 40.0;
  double snr_out_db = 20.0;
  // |f_d| below this is excluded where the estimators are known unstable
  double fd_exclusion = 10.0;

  KnownPhysical knowns() const {
    return KnownPhysical{T_M, T_samp, delta0, c, 0.0, 0.0};
  }
};

struct SweepConfig {
  int fd_points = 41;
  int phase_points = 33;
  std::vector<int> n_grid{125, 250, 500, 1000, 1500, 2000};
  std::vector<int> n_grid_plateau{25, 50, 100, 150, 400, 700, 1000, 1400, 2000};
  std::vector<double> snr_in_grid{0, 5, 10, 15, 20, 25, 30, 35, 40};
  std::vector<double> snr_out_grid{0, 5, 10, 15, 20, 25, 30};
  double snr_out_fixed = 30.0;  // held while sweeping SNR_in
  double snr_in_fixed = 40.0;   // held while sweeping SNR_out
  int scan_points = 13;         // identifiability scan nodes per sweep
  double scan_sigma_v = 0.05;
  int event_pings = 50;         // pings per theorem1_check draw
};

struct ExperimentConfig {
  Experiment experiment = Experiment::vs_fd;
  int reps = 0;  // 0 = profile default
  uint64_t seed = 0x5A577007;
  std::string profile = "desk";  // desk | ci | paper
  std::vector<Method> estimators{Method::PCP, Method::LGS};
  TableParams table;
  GridConfig grid;
  SweepConfig sweep;
  std::string out_dir = "out";
  bool emit_plots = false;
  bool emit_rep_dump = false;
  int threads = 0;  // 0 = hardware; env SAWTOOTH_SYNC_THREADS caps

  int effective_reps() const;  // resolves reps = 0 through the profile
  int effective_threads() const;
  void validate() const;

  static ExperimentConfig from_json_text(const std::string& text);
  std::string to_json_text() const;  // effective config echo (stable order)
};

}  // namespace sawtooth
