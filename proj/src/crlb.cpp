#include "sawtooth/crlb.hpp"

#include <cmath>
#include <stdexcept>

namespace sawtooth {

void UnwrappedParams::validate() const {
  if (!(sigma_sq() > 0))
    throw std::invalid_argument("UnwrappedParams: sigma^2 must be > 0");
  if (N < 2) throw std::invalid_argument("UnwrappedParams: N must be >= 2");
}

UnwrappedParams map_physical_to_unwrapped(const PhysicalParams& p,
                                          const NoiseParams& nz) {
  p.validate();
  nz.validate();
  UnwrappedParams u;
  const double T_S = p.T_S();
  u.alpha_t = p.delta0() + p.delta_rt() / 2.0 + T_S * (1.0 - p.phi_S / two_pi);
  u.beta_t = -T_S * p.T_samp() * p.f_d;
  u.sigma0 = nz.sigma_w;
  u.sigma1 = p.T_M * nz.sigma_v;
  u.sigma2 = nz.sigma_v / static_cast<double>(p.K);
  return u;
}

double unwrapped_to_f_d(const UnwrappedParams& u, double T_M, double T_samp) {
  return -u.beta_t / (T_M * (T_samp + u.beta_t));
}

Mat2 fisher(const UnwrappedParams& u) {
  u.validate();
  const double N = static_cast<double>(u.N);
  const double s2 = u.sigma_sq();
  const double slope_noise = u.sigma1 + u.beta_t * u.sigma2;
  Mat2 f;
  f.a11 = N / s2;
  f.a12 = N / s2 * (N - 1.0) / 2.0;
  f.a22 = N / s2 *
          ((N - 1.0) * (2.0 * N - 1.0) / 6.0 +
           2.0 * u.sigma2 * u.sigma2 * slope_noise * slope_noise / s2);
  return f;
}

Mat2 inverse_fisher(const UnwrappedParams& u) {
  u.validate();
  const double N = static_cast<double>(u.N);
  const double s2 = u.sigma_sq();
  const double slope_noise = u.sigma1 + u.beta_t * u.sigma2;
  const double extra =
      2.0 * u.sigma2 * u.sigma2 * slope_noise * slope_noise / (s2 * (N - 1.0));
  const double scale = s2 / N / ((N + 1.0) / 12.0 + extra);
  Mat2 inv;
  inv.a11 = scale * ((2.0 * N - 1.0) / 6.0 + extra);
  inv.a12 = scale * -0.5;
  inv.a22 = scale / (N - 1.0);
  return inv;
}

std::pair<double, double> crlb_gradient(const PhysicalParams& p,
                                        PhysicalTarget which) {
  const double T_S = p.T_S();
  const double K = static_cast<double>(p.K);
  switch (which) {
    case PhysicalTarget::freq_diff:
      return {0.0, -1.0 / (T_S * T_S * K)};
    case PhysicalTarget::round_trip_delay:
      return {2.0, 2.0 * (p.phi_S / two_pi - 1.0) / K};
    case PhysicalTarget::slave_phase:
      return {-two_pi / T_S, -two_pi / T_S * (p.phi_S / two_pi - 1.0) / K};
  }
  throw std::invalid_argument("crlb_gradient: unknown target");
}

double crlb_physical(const UnwrappedParams& u, const PhysicalParams& p,
                     PhysicalTarget which) {
  const Mat2 inv = inverse_fisher(u);
  const auto [ga, gb] = crlb_gradient(p, which);
  return ga * ga * inv.a11 + 2.0 * ga * gb * inv.a12 + gb * gb * inv.a22;
}

std::vector<double> crlb_physical(
    const UnwrappedParams& u, const PhysicalParams& p,
    std::initializer_list<PhysicalTarget> which) {
  bool wants_delta = false, wants_phase = false;
  for (PhysicalTarget t : which) {
    wants_delta |= t == PhysicalTarget::round_trip_delay;
    wants_phase |= t == PhysicalTarget::slave_phase;
  }
  if (wants_delta && wants_phase)
    throw std::invalid_argument(
        "crlb_physical: delta_rt and phi_S cannot be jointly identified "
        "(proportional gradients, singular Jacobian)");
  std::vector<double> out;
  out.reserve(which.size());
  for (PhysicalTarget t : which) out.push_back(crlb_physical(u, p, t));
  return out;
}

double crlb_offset_known_line(double psi, double sigma_w, double sigma_v,
                              int64_t N, OffsetTarget target) {
  if (N < 1) throw std::invalid_argument("crlb_offset_known_line: N >= 1");
  if (psi == 0) throw std::invalid_argument("crlb_offset_known_line: psi != 0");
  const double s2 = sigma_w * sigma_w + psi * psi * sigma_v * sigma_v;
  const double bound = s2 / static_cast<double>(N);
  return target == OffsetTarget::alpha ? bound : bound / (psi * psi);
}

}  // namespace sawtooth
