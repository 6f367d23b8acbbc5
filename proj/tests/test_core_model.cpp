#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sawtooth/identifiability.hpp"
#include "sawtooth/mod1.hpp"
#include "sawtooth/model.hpp"
#include "sawtooth/params.hpp"
#include "sawtooth/rng.hpp"
#include "sawtooth/trace.hpp"

using namespace sawtooth;

namespace {

// Reference parameter point: T_M = 10 ns, T_samp = 0.1 ms, delta0 ~ 5 us,
// f_d = 100 Hz, rho = 2 m, phi_S = pi.
PhysicalParams example_params() {
  PhysicalParams p;
  p.T_M = 1e-8;
  p.f_d = 100.0;
  p.phi_S = std::numbers::pi;
  p.delta_fwd = 2.0 / 3e8;
  p.delta_bwd = 2.0 / 3e8;
  p.K = 10000;
  p.K0 = std::llround(5e-6 / p.T_S());
  p.c = 3e8;
  return p;
}

PhysicalParams random_table_draw(const CounterRng& rng, bool random_phi_M) {
  PhysicalParams p;
  p.T_M = 1e-8;
  p.f_d = rng.uniform(0, -200.0, 200.0);
  p.phi_S = rng.uniform(1, 0.0, two_pi);
  p.phi_M = random_phi_M ? rng.uniform(2, 0.0, two_pi) : 0.0;
  const double rho = rng.uniform(3, 1.0, 3.0);
  p.delta_fwd = rho / 3e8;
  p.delta_bwd = rho / 3e8;
  p.K = 10000;
  p.K0 = std::llround(5e-6 / p.T_S());
  return p;
}

}  // namespace

TEST_CASE("mod1 basics") {
  CHECK(mod1(0.0) == 0.0);
  CHECK(mod1(-0.25) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(mod1(3.6666673) == doctest::Approx(0.6666673).epsilon(1e-12));
  CHECK(mod1(7.0) == 0.0);
  CHECK(mod1(-3.0) == 0.0);
  CHECK_THROWS_AS(mod1(std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_THROWS_AS(mod1(std::nan("")), std::domain_error);
}

TEST_CASE("mod1 periodicity property") {
  CounterRng rng(41);
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform(2 * i, -1e6, 1e6);
    const int k = static_cast<int>(rng.uniform(2 * i + 1, -5.0, 5.0));
    CHECK(mod1(x + k) == doctest::Approx(mod1(x)).epsilon(1e-9));
    const double r = mod1(x);
    CHECK(r >= 0.0);
    CHECK(r < 1.0);
  }
}

TEST_CASE("physical_to_generic at the reference point") {
  const PhysicalParams p = example_params();
  const GenericParams g = physical_to_generic(p);
  CHECK(g.beta == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(g.psi == doctest::Approx(-9.99999e-9).epsilon(1e-6));
  CHECK(std::fabs(g.psi - (-p.T_M / (p.T_M * p.f_d + 1.0))) < 1e-15);
  CHECK(g.gamma == doctest::Approx(0.1666673).epsilon(1e-6));
  CHECK(g.alpha == doctest::Approx(5.0233e-6).epsilon(1e-4));
}

TEST_CASE("generic_to_physical round trip on Table-I draws") {
  CounterRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const PhysicalParams p = random_table_draw(rng.substream(i), false);
    const GenericParams g = physical_to_generic(p);
    KnownPhysical known;
    known.delta0 = p.delta0();
    const PhysicalEstimate e = generic_to_physical(g, known);
    CHECK(e.feasible);
    CHECK(e.f_d == doctest::Approx(p.f_d).epsilon(1e-9));
    CHECK(e.delta_rt == doctest::Approx(p.delta_rt()).epsilon(1e-9));
    CHECK(e.phi_S == doctest::Approx(p.phi_S).epsilon(1e-9));
    CHECK(e.rho == doctest::Approx(p.rho()).epsilon(1e-9));
  }
}

TEST_CASE("generic_to_physical round trip with nonzero master phase") {
  CounterRng rng(8);
  for (int i = 0; i < 200; ++i) {
    const PhysicalParams p = random_table_draw(rng.substream(i), true);
    const GenericParams g = physical_to_generic(p);
    KnownPhysical known;
    known.delta0 = p.delta0();
    known.phi_M = p.phi_M;
    const PhysicalEstimate e = generic_to_physical(g, known);
    CHECK(e.phi_S == doctest::Approx(p.phi_S).epsilon(1e-9));
    CHECK(e.f_d == doctest::Approx(p.f_d).epsilon(1e-9));
  }
}

TEST_CASE("generic_to_physical degenerate cases") {
  KnownPhysical known;
  GenericParams g;
  g.beta = 0.0;
  g.psi = -known.T_M;
  g.gamma = 0.25;
  g.alpha = known.delta0 + known.T_M;  // delta_rt = 0
  const PhysicalEstimate e = generic_to_physical(g, known);
  CHECK(e.f_d == 0.0);
  CHECK(e.T_S == known.T_M);
  CHECK(std::fabs(e.rho) < 1e-12);  // zero up to the rounding of alpha

  // negative recovered round-trip delay is flagged, not clamped
  g.alpha = known.delta0 + known.T_M - 1e-9;
  const PhysicalEstimate bad = generic_to_physical(g, known);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.delta_rt < 0.0);
}

TEST_CASE("rtt_deterministic values and bounds") {
  const PhysicalParams p = example_params();
  CHECK(rtt_deterministic(p, 0) == doctest::Approx(5.0217e-6).epsilon(1e-4));

  PhysicalParams flat = example_params();
  flat.f_d = 0.0;
  flat.delta_fwd = 0.0;
  flat.phi_S = 0.0;
  flat.K0 = 500;
  for (int n = 0; n < 16; ++n)
    CHECK(rtt_deterministic(flat, n) ==
          doctest::Approx(flat.delta_rt() + flat.delta0() + flat.T_S())
              .epsilon(1e-15));

  // Theorem-1 bound: (delta_rt + delta0, delta_rt + delta0 + T_S]
  CounterRng rng(11);
  for (int i = 0; i < 200; ++i) {
    const PhysicalParams q = random_table_draw(rng.substream(i), false);
    for (int n = 0; n < 50; ++n) {
      const double y = rtt_deterministic(q, n);
      CHECK(y > q.delta_rt() + q.delta0());
      CHECK(y <= q.delta_rt() + q.delta0() + q.T_S() * (1 + 1e-12));
    }
  }
}

TEST_CASE("master/slave complementarity") {
  CounterRng rng(12);
  for (int i = 0; i < 200; ++i) {
    const PhysicalParams p = random_table_draw(rng.substream(i), false);
    const double expect = p.T_samp() + p.delta_rt();
    for (int n = 0; n < 25; ++n) {
      const double s = rtt_deterministic(p, n) + tdc_slave_deterministic(p, n);
      CHECK(std::fabs(s - expect) <= 1e-15 * expect);
    }
  }
}

TEST_CASE("tdc_slave_deterministic rejects K <= K0 + 1") {
  PhysicalParams p = example_params();
  p.K = p.K0;  // violates the sampling headroom requirement
  CHECK_THROWS_AS(tdc_slave_deterministic(p, 0), std::invalid_argument);
}

TEST_CASE("sample_trace noiseless equals the deterministic signal") {
  GenericParams g{1.5e-6, -1e-8, 0.013, 0.42};
  NoiseParams nz;
  const Trace t = sample_trace(g, nz, 256, 99);
  for (int n = 0; n < 256; ++n)
    CHECK(t.y[n] == g.alpha + g.psi * mod1(g.beta * n + g.gamma));
  // residuals cancel to the last rounding of the generator expression
  CHECK(prediction_mse(t, g) <= 1e-40);
}

TEST_CASE("sample_trace inner noise stays within the amplitude bounds") {
  GenericParams g{2.0, -1.0, 0.1, 0.3};
  NoiseParams nz;
  nz.sigma_v = 0.2;
  const Trace t = sample_trace(g, nz, 5000, 4);
  const double lo = std::min(g.alpha, g.alpha + g.psi);
  const double hi = std::max(g.alpha, g.alpha + g.psi);
  for (double v : t.y) {
    CHECK(v >= lo);
    CHECK(v <= hi);
  }
}

TEST_CASE("sample_trace outer-noise moments") {
  // empirical residual variance ~ sigma_w^2 + var of the wrapped term
  GenericParams g{0.0, 1.0, 1.0 / std::numbers::pi / 3.0, 0.1};  // irrational
  NoiseParams nz;
  nz.sigma_w = 0.5;
  const int N = 100000;
  const Trace t = sample_trace(g, nz, N, 5);
  double mean = 0.0;
  for (double v : t.y) mean += v;
  mean /= N;
  double var = 0.0;
  for (double v : t.y) var += (v - mean) * (v - mean);
  var /= N;
  const double expect = nz.sigma_w * nz.sigma_w + 1.0 / 12.0;
  CHECK(var == doctest::Approx(expect).epsilon(0.05));
}

TEST_CASE("sample_trace reproducibility and beta aliasing") {
  GenericParams g{0.0, 1.0, 0.25, 0.6};
  NoiseParams nz;
  nz.sigma_w = 0.1;
  nz.sigma_v = 0.05;
  const Trace a = sample_trace(g, nz, 512, 1234);
  const Trace b = sample_trace(g, nz, 512, 1234);
  CHECK(a.y == b.y);

  // beta and beta + 1 produce identical samples (noiseless); dyadic values
  // keep both evaluation paths exact so the match is bitwise
  NoiseParams clean;
  GenericParams g1{0.0, 1.0, -0.375, 27.0 / 128.0};
  const Trace t1 = sample_trace(g1, clean, 128, 1);
  for (int n = 0; n < 128; ++n) {
    const double aliased = g1.alpha + g1.psi * mod1((g1.beta + 1.0) * n + g1.gamma);
    CHECK(t1.y[n] == aliased);
  }
}

TEST_CASE("prediction_mse oracle cases") {
  GenericParams g{1.0, 1.0, 0.05, 0.1};
  NoiseParams clean;
  Trace t = sample_trace(g, clean, 400, 2);

  // constant shift scores as d^2
  const double d = 0.37;
  for (double& v : t.y) v += d;
  CHECK(prediction_mse(t, g) == doctest::Approx(d * d).epsilon(1e-12));

  // random theta' against brute-force summation
  GenericParams h{0.8, 1.2, -0.02, 0.77};
  double acc = 0.0;
  for (int n = 0; n < 400; ++n) {
    const double r = t.y[n] - h.alpha - h.psi * mod1(h.beta * n + h.gamma);
    acc += r * r;
  }
  CHECK(prediction_mse(t, h) == doctest::Approx(acc / 400.0).epsilon(1e-14));
}

TEST_CASE("snr conversions") {
  const NoiseParams nz = NoiseParams::from_snr(40.0, 20.0, -1e-8);
  CHECK(nz.sigma_v == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(nz.sigma_w == doctest::Approx(1e-9).epsilon(1e-12));
  CHECK(nz.snr_in_db() == doctest::Approx(40.0).epsilon(1e-12));
  CHECK(nz.snr_out_db(-1e-8) == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
  PhysicalParams p = example_params();
  p.f_d = 6000.0;  // violates |f_d| T_samp < 1/2
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  GenericParams g{0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  GenericParams g2{0.0, 1.0, 0.5, 0.0};
  CHECK_THROWS_AS(g2.validate(), std::invalid_argument);
  GenericParams g3{0.0, 1.0, 0.0, 1.0};
  CHECK_THROWS_AS(g3.validate(), std::invalid_argument);
}
