#include "sawtooth/trace.hpp"

#include <stdexcept>

#include "sawtooth/mod1.hpp"
#include "sawtooth/rng.hpp"

namespace sawtooth {

Trace sample_trace(const GenericParams& g, const NoiseParams& nz,
                   int n_samples, uint64_t seed) {
  g.validate();
  nz.validate();
  if (n_samples < 1) throw std::invalid_argument("sample_trace: N must be >= 1");

  CounterRng rng(seed);
  const CounterRng rng_w = rng.substream(0x77);
  const CounterRng rng_v = rng.substream(0x76);

  Trace t;
  t.y.resize(n_samples);
  t.meta.generic = g;
  t.meta.noise = nz;
  t.meta.seed = seed;
  t.meta.kind = GeneratorKind::closed_form;
  for (int n = 0; n < n_samples; ++n) {
    double arg = g.beta * static_cast<double>(n) + g.gamma;
    if (nz.sigma_v > 0) arg += nz.sigma_v * rng_v.normal(n);
    double y = g.alpha + g.psi * mod1(arg);
    if (nz.sigma_w > 0) y += nz.sigma_w * rng_w.normal(n);
    t.y[n] = y;
  }
  return t;
}

double prediction_mse(const Trace& t, const GenericParams& g) {
  g.validate();
  if (t.y.empty()) throw std::invalid_argument("prediction_mse: empty trace");
  double acc = 0.0;
  for (int64_t n = 0; n < t.size(); ++n) {
    double r = t.y[n] - g.alpha -
               g.psi * mod1(g.beta * static_cast<double>(t.n0 + n) + g.gamma);
    acc += r * r;
  }
  return acc / static_cast<double>(t.size());
}

}  // namespace sawtooth
