#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sawtooth/event_sim.hpp"
#include "sawtooth/model.hpp"
#include "sawtooth/rng.hpp"

using namespace sawtooth;

namespace {

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

TEST_CASE("slave_next_upflank basics") {
  PhysicalParams p;
  p.T_M = 1e-8;
  p.f_d = 0.0;
  p.phi_S = 0.0;
  p.K = 100;

  // exactly on an upflank: Delta = 0
  CHECK(slave_next_upflank(3.0 * p.T_S(), p) == doctest::Approx(3.0 * p.T_S()));
  // half a period away
  const double t = 0.5 * p.T_S();
  CHECK(slave_next_upflank(t, p) - t == doctest::Approx(0.5 * p.T_S()));
}

TEST_CASE("slave_next_upflank matches a linear scan") {
  CounterRng rng(21);
  for (int i = 0; i < 500; ++i) {
    PhysicalParams p = random_table_draw(rng.substream(i), false);
    const CounterRng sub = rng.substream(1000 + i);
    const double t = sub.uniform(0, 0.0, 1e-3);
    const double T_S = p.T_S();
    const double offset = T_S * p.phi_S / two_pi;
    const double up = slave_next_upflank(t, p);

    // oracle: scan integer upflank indices around t
    const long long k0 = static_cast<long long>(std::floor((t + offset) / T_S)) - 2;
    double best = std::numeric_limits<double>::infinity();
    for (long long k = k0; k < k0 + 6; ++k) {
      const double tau = static_cast<double>(k) * T_S - offset;
      if (tau >= t && tau < best) best = tau;
    }
    CHECK(up == doctest::Approx(best).epsilon(1e-12));
    CHECK(up >= t);
    CHECK(up - t < T_S);
  }
}

TEST_CASE("zero-jitter protocol equals the closed-form models") {
  CounterRng rng(31);
  for (int i = 0; i < 300; ++i) {
    const bool random_phi_M = i % 2 == 1;
    EventSimConfig cfg;
    cfg.params = random_table_draw(rng.substream(i), random_phi_M);
    cfg.n_pings = 25;
    const EventTrace tr = run_protocol(cfg);
    CHECK(tr.dropped.empty());
    const double T_S = cfg.params.T_S();
    for (int n = 0; n < cfg.n_pings; ++n) {
      CHECK(std::fabs(tr.master_rtts[n] - rtt_deterministic(cfg.params, n)) <=
            1e-12 * T_S);
      // the slave interval is T_samp-sized, so allow its double granularity
      const double x_det = tdc_slave_deterministic(cfg.params, n);
      const double tol =
          1e-12 * T_S + 2.0 * std::numeric_limits<double>::epsilon() * x_det;
      CHECK(std::fabs(tr.slave_tdc[n] - x_det) <= tol);
    }
  }
}

TEST_CASE("causality and event ordering") {
  CounterRng rng(32);
  EventSimConfig cfg;
  cfg.params = random_table_draw(rng.substream(0), false);
  cfg.n_pings = 200;
  const EventTrace tr = run_protocol(cfg);
  const double d_min = cfg.params.delta_rt() + cfg.params.delta0();
  for (int n = 0; n < cfg.n_pings; ++n) {
    CHECK(tr.pong_arrivals[n] >= tr.ping_departures[n] + d_min * (1 - 1e-12));
    CHECK(tr.ping_arrivals[n] - tr.ping_departures[n] ==
          doctest::Approx(cfg.params.delta_fwd));
    if (n > 0) {
      CHECK(tr.ping_departures[n] > tr.ping_departures[n - 1]);
      CHECK(tr.pong_departures[n] > tr.pong_departures[n - 1]);
    }
  }
}

TEST_CASE("TDC quantization bound") {
  CounterRng rng(33);
  EventSimConfig cfg;
  cfg.params = random_table_draw(rng.substream(5), false);
  cfg.n_pings = 50;
  EventSimConfig ideal = cfg;
  cfg.tdc_resolution = 1e-12;
  const EventTrace a = run_protocol(cfg);
  const EventTrace b = run_protocol(ideal);
  for (int n = 0; n < cfg.n_pings; ++n) {
    CHECK(std::fabs(a.master_rtts[n] - b.master_rtts[n]) < 1e-12);
    CHECK(std::fabs(a.slave_tdc[n] - b.slave_tdc[n]) < 1e-12);
  }
}

TEST_CASE("period jitter produces both effect kinds") {
  // effect i]: ~T_S jumps when the catching upflank changes;
  // effect ii]: small additive deviations otherwise.
  EventSimConfig cfg;
  cfg.params = random_table_draw(CounterRng(77), false);
  cfg.params.f_d = 25.0;
  cfg.n_pings = 1500;
  cfg.jitter.period_master = 2e-12;
  cfg.jitter.period_slave = 2e-12;
  cfg.seed = 9;
  const EventTrace tr = run_protocol(cfg);
  CHECK(tr.dropped.empty());

  const double T_S = cfg.params.T_S();
  int big_jumps = 0, small_devs = 0;
  for (int n = 0; n < cfg.n_pings; ++n) {
    const double dev = tr.master_rtts[n] - rtt_deterministic(cfg.params, n);
    if (std::fabs(std::fabs(dev) - T_S) < 0.25 * T_S)
      ++big_jumps;
    else if (std::fabs(dev) < 0.25 * T_S && dev != 0.0)
      ++small_devs;
  }
  // bimodal: both families present
  CHECK(big_jumps > 0);
  CHECK(small_devs > big_jumps);
}

TEST_CASE("extreme jitter drops are flagged, not reordered") {
  EventSimConfig cfg;
  cfg.params = random_table_draw(CounterRng(78), false);
  cfg.params.f_d = 50.0;
  cfg.params.K0 = 9998;  // pong departs right before the next ping
  cfg.params.K = 10000;
  cfg.n_pings = 400;
  cfg.jitter.period_slave = 8e-11;
  cfg.seed = 10;
  const EventTrace tr = run_protocol(cfg);
  CHECK(!tr.dropped.empty());
  CHECK(tr.dropped.size() < tr.master_rtts.size());
  for (int idx : tr.dropped) {
    CHECK(std::isnan(tr.master_rtts[idx]));
    CHECK(std::isnan(tr.slave_tdc[idx]));
    if (idx + 1 < static_cast<int>(tr.ping_arrivals.size()))
      CHECK(tr.pong_departures[idx] >= tr.ping_arrivals[idx + 1]);
  }
}

TEST_CASE("event trace CSV dump") {
  EventSimConfig cfg;
  cfg.params = random_table_draw(CounterRng(79), false);
  cfg.n_pings = 4;
  std::ostringstream os;
  write_event_trace_csv(run_protocol(cfg), os);
  const std::string csv = os.str();
  CHECK(csv.rfind("n,ping_departure,ping_arrival,pong_departure,pong_arrival,"
                  "rtt,slave_tdc\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
