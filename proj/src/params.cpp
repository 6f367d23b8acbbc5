#include "sawtooth/params.hpp"

#include <cmath>
#include <stdexcept>

namespace sawtooth {

namespace {
void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

void PhysicalParams::validate() const {
  require(std::isfinite(T_M) && T_M > 0, "PhysicalParams: T_M must be > 0");
  require(std::isfinite(f_d), "PhysicalParams: f_d must be finite");
  require(T_S() > 0, "PhysicalParams: T_S must be > 0");
  require(K >= 1, "PhysicalParams: K must be >= 1");
  require(K0 >= 0, "PhysicalParams: K0 must be >= 0");
  require(delta_fwd >= 0, "PhysicalParams: delta_fwd must be >= 0");
  require(delta_bwd >= 0, "PhysicalParams: delta_bwd must be >= 0");
  require(c > 0, "PhysicalParams: c must be > 0");
  require(phi_S >= 0 && phi_S < two_pi, "PhysicalParams: phi_S outside [0, 2pi)");
  // Nyquist-like restriction |f_d| < 1/(2 T_samp)
  require(std::fabs(f_d) * T_samp() < 0.5,
          "PhysicalParams: |f_d| T_samp must be < 1/2");
}

void PhysicalParams::validate_slave_model() const {
  validate();
  require(K > K0 + 1, "PhysicalParams: slave model requires K > K0 + 1");
}

void GenericParams::validate() const {
  require(std::isfinite(alpha), "GenericParams: alpha must be finite");
  require(std::isfinite(psi) && psi != 0.0, "GenericParams: psi must be nonzero");
  require(beta >= -0.5 && beta < 0.5, "GenericParams: beta outside [-1/2, 1/2)");
  require(gamma >= 0.0 && gamma < 1.0, "GenericParams: gamma outside [0, 1)");
}

NoiseParams NoiseParams::from_snr(double snr_in_db, double snr_out_db,
                                  double psi) {
  NoiseParams nz;
  nz.sigma_v = std::pow(10.0, -snr_in_db / 20.0);
  nz.sigma_w = std::fabs(psi) * std::pow(10.0, -snr_out_db / 20.0);
  return nz;
}

double NoiseParams::snr_in_db() const { return -20.0 * std::log10(sigma_v); }

double NoiseParams::snr_out_db(double psi) const {
  return 20.0 * std::log10(std::fabs(psi) / sigma_w);
}

void NoiseParams::validate() const {
  require(sigma_w >= 0, "NoiseParams: sigma_w must be >= 0");
  require(sigma_v >= 0, "NoiseParams: sigma_v must be >= 0");
}

GenericParams physical_to_generic(const PhysicalParams& p) {
  p.validate();
  GenericParams g;
  const double T_S = p.T_S();
  g.alpha = p.delta0() + p.delta_rt() + T_S;
  g.psi = -T_S;
  g.beta = p.f_d * p.T_samp();
  g.gamma = mod1(p.delta_fwd / T_S + p.phase_cycles());
  g.validate();
  return g;
}

PhysicalEstimate generic_to_physical(const GenericParams& g,
                                     const KnownPhysical& known) {
  g.validate();
  PhysicalEstimate e;
  e.f_d = g.beta / known.T_samp;
  e.T_S = known.T_M / (known.T_M * e.f_d + 1.0);
  e.delta_rt = g.alpha - known.delta0 - e.T_S;
  e.feasible = e.delta_rt >= 0.0;
  e.delta_fwd = e.delta_rt / 2.0;
  e.delta_bwd = e.delta_rt / 2.0;
  e.phi_S = two_pi * mod1(g.gamma - mod1(e.delta_fwd / e.T_S) +
                          (known.T_M / e.T_S) * known.phi_M / two_pi);
  e.rho = known.c * (e.delta_fwd - known.delta1);
  return e;
}

}  // namespace sawtooth
