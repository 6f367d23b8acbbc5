#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "sawtooth/params.hpp"

namespace sawtooth {

// Linear model with slope-dependent noise: Z[n] = alpha_t + beta_t n + U[n],
// Var(U) = sigma0^2 + (sigma1 + beta_t sigma2)^2.
struct UnwrappedParams {
  double alpha_t = 0.0;  // intercept [s]
  double beta_t = 0.0;   // slope [s/sample]
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  int64_t N = 2;

  double sigma_sq() const {
    double s = sigma1 + beta_t * sigma2;
    return sigma0 * sigma0 + s * s;
  }
  void validate() const;
};

// Symmetric 2x2 positive-definite matrix over (alpha_t, beta_t).
struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a22 = 0.0;

  double det() const { return a11 * a22 - a12 * a12; }
};

// alpha_t = delta0 + delta_rt/2 + T_S (1 - phi_S/2pi),
// beta_t = -T_S T_samp f_d, sigma0 = sigma_w, sigma1 = T_M sigma_v,
// sigma2 = sigma_v / K.
UnwrappedParams map_physical_to_unwrapped(const PhysicalParams& p,
                                          const NoiseParams& nz);
// f_d back from the slope: -beta_t / (T_M (T_samp + beta_t)).
double unwrapped_to_f_d(const UnwrappedParams& u, double T_M, double T_samp);

Mat2 fisher(const UnwrappedParams& u);
Mat2 inverse_fisher(const UnwrappedParams& u);

enum class PhysicalTarget { freq_diff, round_trip_delay, slave_phase };

// Gradient of the target w.r.t. (alpha_t, beta_t), in physical terms.
// round_trip_delay assumes phi_S known; slave_phase assumes delta_rt known.
std::pair<double, double> crlb_gradient(const PhysicalParams& p,
                                        PhysicalTarget which);

// grad^T F^{-1} grad. Requesting round_trip_delay and slave_phase together
// is an error: their gradients are proportional (singular Jacobian).
double crlb_physical(const UnwrappedParams& u, const PhysicalParams& p,
                     PhysicalTarget which);
std::vector<double> crlb_physical(const UnwrappedParams& u,
                                  const PhysicalParams& p,
                                  std::initializer_list<PhysicalTarget> which);

enum class OffsetTarget { alpha, gamma };

// Known-line bounds: Var(alpha_hat) >= (sigma_w^2 + psi^2 sigma_v^2)/N with
// gamma known; Var(gamma_hat) >= the same over psi^2 with alpha known.
double crlb_offset_known_line(double psi, double sigma_w, double sigma_v,
                              int64_t N, OffsetTarget target);

inline double to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace sawtooth
