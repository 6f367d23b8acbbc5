#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sawtooth/experiments.hpp"

namespace {

int load_config(const std::string& path, sawtooth::ExperimentConfig* cfg) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot open config " << path << "\n";
    return 2;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  try {
    *cfg = sawtooth::ExperimentConfig::from_json_text(ss.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sawtooth RTT clock-sync and ranging toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string experiment_override, out_override, profile_override;
  uint64_t seed_override = 0;
  bool seed_set = false;
  int reps_override = 0;
  bool emit_plots = false, do_assert = false;

  CLI::App* run = app.add_subcommand("run", "run an experiment");
  run->add_option("--config", config_path, "config JSON path")->required();
  run->add_option("--experiment", experiment_override,
                  "override the configured experiment id");
  run->add_option("--seed", seed_override, "override the master seed")
      ->each([&](const std::string&) { seed_set = true; });
  run->add_option("--reps", reps_override, "override the Monte Carlo count");
  run->add_option("--out", out_override, "override the output directory");
  run->add_option("--profile", profile_override, "desk|ci|paper");
  run->add_flag("--emit-plots", emit_plots, "write SVG figures");
  run->add_flag("--assert", do_assert,
                "run the experiment's acceptance checks (exit 3 on failure)");

  CLI::App* validate = app.add_subcommand("validate", "validate a config");
  validate->add_option("--config", config_path, "config JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  sawtooth::ExperimentConfig cfg;
  if (int rc = load_config(config_path, &cfg)) return rc;

  if (validate->parsed()) {
    std::cout << "config ok: " << sawtooth::experiment_name(cfg.experiment)
              << ", reps " << cfg.effective_reps() << "\n";
    return 0;
  }

  try {
    if (!experiment_override.empty())
      cfg.experiment = sawtooth::experiment_from_name(experiment_override);
    if (seed_set) cfg.seed = seed_override;
    if (reps_override > 0) cfg.reps = reps_override;
    if (!out_override.empty()) cfg.out_dir = out_override;
    if (!profile_override.empty()) cfg.profile = profile_override;
    if (emit_plots) cfg.emit_plots = true;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const sawtooth::ExperimentOutput out = sawtooth::run_experiment(cfg);
    const std::string csv = sawtooth::write_outputs(cfg, out);
    std::cout << "wrote " << csv << " (" << out.rows.size() << " rows)\n";
    if (do_assert) {
      bool all_pass = true;
      for (const auto& c : sawtooth::acceptance_checks(cfg, out.rows)) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": "
                  << c.detail << "\n";
        all_pass = all_pass && c.pass;
      }
      if (!all_pass) return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
