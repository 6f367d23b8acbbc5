#include "sawtooth/model.hpp"

#include "sawtooth/mod1.hpp"

namespace sawtooth {

double sawtooth_h(const PhysicalParams& p, int64_t n) {
  return 1.0 - mod1(p.T_samp() * p.f_d * static_cast<double>(n) +
                    p.delta_fwd / p.T_S() + p.phase_cycles());
}

double rtt_deterministic(const PhysicalParams& p, int64_t n) {
  p.validate();
  return p.delta_rt() + p.delta0() + p.T_S() * sawtooth_h(p, n);
}

double tdc_slave_deterministic(const PhysicalParams& p, int64_t n) {
  p.validate_slave_model();
  return p.T_samp() - p.delta0() - p.T_S() * sawtooth_h(p, n);
}

Trace sample_trace_physical(const PhysicalParams& p, const NoiseParams& nz,
                            int n_samples, uint64_t seed) {
  Trace t = sample_trace(physical_to_generic(p), nz, n_samples, seed);
  t.meta.physical = p;
  return t;
}

}  // namespace sawtooth
