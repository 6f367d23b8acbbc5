#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sawtooth/params.hpp"

namespace sawtooth {

enum class GeneratorKind { closed_form, event_sim };

struct TraceMeta {
  std::optional<PhysicalParams> physical;
  std::optional<GenericParams> generic;
  NoiseParams noise;
  uint64_t seed = 0;
  GeneratorKind kind = GeneratorKind::closed_form;
};

// One realization y[n0 .. n0+N-1] of RTT measurements plus provenance.
struct Trace {
  std::vector<double> y;
  int64_t n0 = 0;
  TraceMeta meta;

  int64_t size() const { return static_cast<int64_t>(y.size()); }
};

// Y[n] = alpha + W[n] + psi mod1(beta n + gamma + V[n]), W ~ N(0, sigma_w^2),
// V ~ N(0, sigma_v^2) independent white. Bit-reproducible given the seed;
// exactly the noiseless signal when both sigmas are zero.
Trace sample_trace(const GenericParams& g, const NoiseParams& nz,
                   int n_samples, uint64_t seed);

// (1/N) sum (y[n] - alpha - psi mod1(beta n + gamma))^2
double prediction_mse(const Trace& t, const GenericParams& g);

}  // namespace sawtooth
