#include "sawtooth/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace sawtooth {

using ordered_json = nlohmann::ordered_json;

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::vs_fd: return "vs_fd";
    case Experiment::vs_phase: return "vs_phase";
    case Experiment::vs_N: return "vs_N";
    case Experiment::vs_snr: return "vs_snr";
    case Experiment::epsilon_plateau: return "epsilon_plateau";
    case Experiment::theorem1_check: return "theorem1_check";
    case Experiment::identifiability_scan: return "identifiability_scan";
  }
  return "?";
}

Experiment experiment_from_name(const std::string& name) {
  for (Experiment e :
       {Experiment::vs_fd, Experiment::vs_phase, Experiment::vs_N,
        Experiment::vs_snr, Experiment::epsilon_plateau,
        Experiment::theorem1_check, Experiment::identifiability_scan})
    if (name == experiment_name(e)) return e;
  throw std::invalid_argument("unknown experiment: " + name);
}

int ExperimentConfig::effective_reps() const {
  if (reps > 0) return reps;
  struct Row {
    Experiment e;
    int desk, ci, paper;
  };
  static constexpr Row kDefaults[] = {
      {Experiment::vs_fd, 100, 30, 300},
      {Experiment::vs_phase, 100, 30, 300},
      {Experiment::vs_N, 100, 30, 2000},
      {Experiment::vs_snr, 100, 30, 1000},
      {Experiment::epsilon_plateau, 500, 60, 2000},
      {Experiment::theorem1_check, 1000, 200, 1000},
      {Experiment::identifiability_scan, 1, 1, 1},
  };
  for (const Row& r : kDefaults)
    if (r.e == experiment) {
      if (profile == "ci") return r.ci;
      if (profile == "paper") return r.paper;
      return r.desk;
    }
  return 100;
}

int ExperimentConfig::effective_threads() const {
  int t = threads;
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t <= 0) t = 1;
  if (const char* env = std::getenv("SAWTOOTH_SYNC_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) t = std::min(t, cap);
  }
  return t;
}

void ExperimentConfig::validate() const {
  if (effective_reps() < 1)
    throw std::invalid_argument("config: reps must be >= 1");
  if (profile != "desk" && profile != "ci" && profile != "paper")
    throw std::invalid_argument("config: profile must be desk|ci|paper");
  if (estimators.empty())
    throw std::invalid_argument("config: estimators must be non-empty");
  if (table.N < 16) throw std::invalid_argument("config: table.N too small");
  if (table.T_M <= 0 || table.T_samp <= 0 || table.delta0 < 0 || table.c <= 0)
    throw std::invalid_argument("config: invalid physical defaults");
  auto check_range = [](const Range& r, const char* what) {
    if (!(r.lo < r.hi))
      throw std::invalid_argument(std::string("config: empty range for ") + what);
  };
  check_range(table.rho, "rho");
  check_range(table.f_d, "f_d");
  check_range(table.phi_S, "phi_S");
  const double fd_max = std::max(std::fabs(table.f_d.lo), std::fabs(table.f_d.hi));
  if (fd_max * table.T_samp >= 0.5)
    throw std::invalid_argument("config: f_d range violates |f_d| T_samp < 1/2");
  grid.validate();
  if (sweep.fd_points < 2 || sweep.phase_points < 2)
    throw std::invalid_argument("config: sweep point counts too small");
  for (auto g : {sweep.n_grid, sweep.n_grid_plateau}) {
    if (g.empty()) throw std::invalid_argument("config: empty N grid");
    for (int n : g)
      if (n < 5) throw std::invalid_argument("config: N grid entry too small");
  }
  if (sweep.scan_points < 2 || sweep.scan_sigma_v <= 0 || sweep.event_pings < 2)
    throw std::invalid_argument("config: invalid scan/event sweep settings");
}

namespace {

Method method_from_name(const std::string& s) {
  if (s == "PCP") return Method::PCP;
  if (s == "LGS") return Method::LGS;
  if (s == "GGS") return Method::GGS;
  throw std::invalid_argument("unknown estimator: " + s);
}

Range range_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("config: range must be [lo, hi]");
  return Range{j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
void maybe(const ordered_json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") +
                                e.what());
  }
  ExperimentConfig c;
  if (j.contains("experiment"))
    c.experiment = experiment_from_name(j.at("experiment").get<std::string>());
  maybe(j, "reps", c.reps);
  maybe(j, "seed", c.seed);
  maybe(j, "profile", c.profile);
  if (j.contains("estimators")) {
    c.estimators.clear();
    for (const auto& s : j.at("estimators"))
      c.estimators.push_back(method_from_name(s.get<std::string>()));
  }
  if (j.contains("table")) {
    const auto& t = j.at("table");
    maybe(t, "N", c.table.N);
    maybe(t, "delta0", c.table.delta0);
    maybe(t, "T_M", c.table.T_M);
    maybe(t, "T_samp", c.table.T_samp);
    maybe(t, "c", c.table.c);
    if (t.contains("rho_range")) c.table.rho = range_from_json(t.at("rho_range"));
    if (t.contains("f_d_range")) c.table.f_d = range_from_json(t.at("f_d_range"));
    if (t.contains("phi_S_range"))
      c.table.phi_S = range_from_json(t.at("phi_S_range"));
    maybe(t, "snr_in_db", c.table.snr_in_db);
    maybe(t, "snr_out_db", c.table.snr_out_db);
    maybe(t, "fd_exclusion", c.table.fd_exclusion);
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    maybe(g, "beta_halfwidth", c.grid.beta_halfwidth);
    maybe(g, "beta_points", c.grid.beta_points);
    maybe(g, "gamma_halfwidth", c.grid.gamma_halfwidth);
    maybe(g, "gamma_points", c.grid.gamma_points);
    maybe(g, "gamma_points_global", c.grid.gamma_points_global);
  }
  if (j.contains("sweep")) {
    const auto& s = j.at("sweep");
    maybe(s, "fd_points", c.sweep.fd_points);
    maybe(s, "phase_points", c.sweep.phase_points);
    maybe(s, "n_grid", c.sweep.n_grid);
    maybe(s, "n_grid_plateau", c.sweep.n_grid_plateau);
    maybe(s, "snr_in_grid", c.sweep.snr_in_grid);
    maybe(s, "snr_out_grid", c.sweep.snr_out_grid);
    maybe(s, "snr_out_fixed", c.sweep.snr_out_fixed);
    maybe(s, "snr_in_fixed", c.sweep.snr_in_fixed);
    maybe(s, "scan_points", c.sweep.scan_points);
    maybe(s, "scan_sigma_v", c.sweep.scan_sigma_v);
    maybe(s, "event_pings", c.sweep.event_pings);
  }
  maybe(j, "out_dir", c.out_dir);
  maybe(j, "emit_plots", c.emit_plots);
  maybe(j, "emit_rep_dump", c.emit_rep_dump);
  maybe(j, "threads", c.threads);
  c.validate();
  return c;
}

std::string ExperimentConfig::to_json_text() const {
  ordered_json j;
  j["experiment"] = experiment_name(experiment);
  j["reps"] = effective_reps();
  j["seed"] = seed;
  j["profile"] = profile;
  {
    ordered_json a = ordered_json::array();
    for (Method m : estimators) a.push_back(method_name(m));
    j["estimators"] = a;
  }
  ordered_json t;
  t["N"] = table.N;
  t["delta0"] = table.delta0;
  t["T_M"] = table.T_M;
  t["T_samp"] = table.T_samp;
  t["c"] = table.c;
  t["rho_range"] = {table.rho.lo, table.rho.hi};
  t["f_d_range"] = {table.f_d.lo, table.f_d.hi};
  t["phi_S_range"] = {table.phi_S.lo, table.phi_S.hi};
  t["snr_in_db"] = table.snr_in_db;
  t["snr_out_db"] = table.snr_out_db;
  t["fd_exclusion"] = table.fd_exclusion;
  j["table"] = t;
  ordered_json g;
  g["beta_halfwidth"] = grid.beta_halfwidth;
  g["beta_points"] = grid.beta_points;
  g["gamma_halfwidth"] = grid.gamma_halfwidth;
  g["gamma_points"] = grid.gamma_points;
  g["gamma_points_global"] = grid.gamma_points_global;
  j["grid"] = g;
  ordered_json s;
  s["fd_points"] = sweep.fd_points;
  s["phase_points"] = sweep.phase_points;
  s["n_grid"] = sweep.n_grid;
  s["n_grid_plateau"] = sweep.n_grid_plateau;
  s["snr_in_grid"] = sweep.snr_in_grid;
  s["snr_out_grid"] = sweep.snr_out_grid;
  s["snr_out_fixed"] = sweep.snr_out_fixed;
  s["snr_in_fixed"] = sweep.snr_in_fixed;
  s["scan_points"] = sweep.scan_points;
  s["scan_sigma_v"] = sweep.scan_sigma_v;
  s["event_pings"] = sweep.event_pings;
  j["sweep"] = s;
  j["out_dir"] = out_dir;
  j["emit_plots"] = emit_plots;
  j["emit_rep_dump"] = emit_rep_dump;
  j["threads"] = threads;
  return j.dump(2) + "\n";
}

}  // namespace sawtooth
