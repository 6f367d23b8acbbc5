#pragma once

#include <cstdint>

#include "sawtooth/params.hpp"
#include "sawtooth/trace.hpp"

namespace sawtooth {

// Sawtooth factor h[n] = 1 - mod1(T_samp f_d n + delta_fwd/T_S + phase).
double sawtooth_h(const PhysicalParams& p, int64_t n);

// Deterministic RTT seen by the master: delta_rt + delta0 + T_S h[n].
double rtt_deterministic(const PhysicalParams& p, int64_t n);

// Deterministic interval seen by the slave's TDC: T_samp - delta0 - T_S h[n].
// Requires K > K0 + 1.
double tdc_slave_deterministic(const PhysicalParams& p, int64_t n);

// Stochastic RTT trace from the physical model (closed form), equal to the
// generic model at theta = physical_to_generic(p).
Trace sample_trace_physical(const PhysicalParams& p, const NoiseParams& nz,
                            int n_samples, uint64_t seed);

}  // namespace sawtooth
