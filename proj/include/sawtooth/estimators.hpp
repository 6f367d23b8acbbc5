#pragma once

#include <optional>
#include <span>
#include <string>

#include "sawtooth/params.hpp"
#include "sawtooth/trace.hpp"

namespace sawtooth {

enum class Method { PCP, LGS, GGS };
const char* method_name(Method m);

// Local grid-search extents. beta_halfwidth = 0 means the default 2/N.
struct GridConfig {
  double beta_halfwidth = 0.0;   // cycles/sample; 0 = auto (2/N)
  int beta_points = 41;          // odd
  double gamma_halfwidth = 0.05;
  int gamma_points = 101;        // odd
  int gamma_points_global = 1000;

  void validate() const;
};

// Amplitude model: clock-sync mode ties psi to beta through
// psi = -T_M/(T_M beta/T_samp + 1); generic mode treats psi as known.
class PsiModel {
 public:
  static PsiModel clock_sync(const KnownPhysical& known);
  static PsiModel known_amplitude(double psi);

  double psi(double beta) const;
  double sign() const { return sign_; }
  const KnownPhysical* knowns() const {
    return clock_sync_ ? &known_ : nullptr;
  }

 private:
  PsiModel() = default;
  bool clock_sync_ = false;
  double psi_known_ = 1.0;
  double sign_ = 1.0;
  KnownPhysical known_;
};

struct Diagnostics {
  int peak_bin = 0;       // periodogram argmax bin (PCP)
  int beta_points = 0;    // grid sizes actually used
  int gamma_points = 0;
};

struct EstimationResult {
  GenericParams theta_hat;
  std::optional<PhysicalEstimate> physical_hat;  // set in clock-sync mode
  double objective = 0.0;  // prediction MSE at theta_hat [s^2]
  Method method = Method::PCP;
  Diagnostics diagnostics;
};

// Least-squares offset for fixed (psi, beta, gamma):
// mean_n(y[n] - psi mod1(beta n + gamma)).
double ls_offset(std::span<const double> y, double psi, double beta,
                 double gamma);

// Periodogram + circular correlation peaks. Needs N >= 16; throws on an
// all-constant trace (no detectable frequency).
EstimationResult pcp_estimate(const Trace& t, const PsiModel& model);

// Grid refinement around an initial estimate; the returned objective never
// exceeds the initial one (the grid center is the init point).
EstimationResult lgs_estimate(const Trace& t, const EstimationResult& init,
                              const GridConfig& grid, const PsiModel& model);

struct GgsResult {
  double alpha_hat = 0.0;
  double gamma_hat = 0.0;
  double objective = 0.0;
  int gamma_points = 0;
};

// Global grid search on gamma with psi and beta known. The minimizing set is
// detected at relative tolerance 1e-9 and its median-index node is returned
// (equivalent to the plain argmin whenever the minimum is unique).
GgsResult ggs_estimate(const Trace& t, double psi_known, double beta_known,
                       int gamma_points_global);

// Squared Euclidean phase error, deliberately unwrapped.
double phase_error(double phi_hat, double phi_true);

}  // namespace sawtooth
