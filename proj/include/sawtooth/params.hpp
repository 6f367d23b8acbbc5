#pragma once

#include <cstdint>
#include <numbers>

#include "sawtooth/mod1.hpp"

namespace sawtooth {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Physical quantities of the two-node RTT protocol. f_d = 1/T_S - 1/T_M is
// primary; T_S is derived from it.
struct PhysicalParams {
  double T_M = 1e-8;       // master clock period [s]
  double f_d = 0.0;        // frequency difference [Hz]
  double phi_M = 0.0;      // master phase [rad]
  double phi_S = 0.0;      // slave phase [rad], in [0, 2pi)
  double delta_fwd = 0.0;  // forward path delay [s]
  double delta_bwd = 0.0;  // backward path delay [s]
  int64_t K = 1;           // sampling factor, T_samp = K T_M
  int64_t K0 = 0;          // slave response-delay factor, delta0 = K0 T_S
  double c = 3e8;          // propagation speed [m/s]

  double T_S() const { return T_M / (T_M * f_d + 1.0); }
  double T_samp() const { return static_cast<double>(K) * T_M; }
  double delta0() const { return static_cast<double>(K0) * T_S(); }
  double delta_rt() const { return delta_fwd + delta_bwd; }
  double rho() const { return c * delta_fwd; }

  // Argument of the sawtooth phase in cycles, (phi_S - (T_M/T_S) phi_M)/2pi.
  double phase_cycles() const {
    return (phi_S - (T_M / T_S()) * phi_M) / two_pi;
  }

  void validate() const;                  // throws std::invalid_argument
  void validate_slave_model() const;      // additionally requires K > K0 + 1
};

// The abstract sawtooth quadruple theta = (alpha, psi, beta, gamma).
struct GenericParams {
  double alpha = 0.0;  // offset [s]
  double psi = 1.0;    // amplitude [s], nonzero
  double beta = 0.0;   // normalized frequency, in [-1/2, 1/2)
  double gamma = 0.0;  // normalized phase, in [0, 1)

  void validate() const;
};

// Inner/outer noise levels. SNR_in = 1/sigma_v^2, SNR_out = psi^2/sigma_w^2.
struct NoiseParams {
  double sigma_w = 0.0;  // outer noise std [s]
  double sigma_v = 0.0;  // inner noise std [cycles]

  static NoiseParams from_snr(double snr_in_db, double snr_out_db, double psi);
  double snr_in_db() const;
  double snr_out_db(double psi) const;
  void validate() const;
};

// Quantities assumed known when inverting the generic parameters.
struct KnownPhysical {
  double T_M = 1e-8;
  double T_samp = 1e-4;
  double delta0 = 5e-6;
  double c = 3e8;
  double delta1 = 0.0;  // known part of the one-way delay
  double phi_M = 0.0;
};

// Physical estimates recovered from a generic quadruple under the
// symmetric-delay assumption. `feasible` is false when the recovered
// round-trip delay is negative (no clamping).
struct PhysicalEstimate {
  double f_d = 0.0;
  double T_S = 0.0;
  double delta_rt = 0.0;
  double delta_fwd = 0.0;
  double delta_bwd = 0.0;
  double phi_S = 0.0;
  double rho = 0.0;
  bool feasible = true;
};

GenericParams physical_to_generic(const PhysicalParams& p);
PhysicalEstimate generic_to_physical(const GenericParams& g,
                                     const KnownPhysical& known);

}  // namespace sawtooth
