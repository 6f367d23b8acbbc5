#include "sawtooth/event_sim.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "sawtooth/rng.hpp"

namespace sawtooth {

void EventSimConfig::validate() const {
  params.validate();
  if (n_pings < 1) throw std::invalid_argument("EventSimConfig: n_pings >= 1");
  if (jitter.period_master < 0 || jitter.period_slave < 0 ||
      jitter.delay_fwd < 0 || jitter.delay_bwd < 0)
    throw std::invalid_argument("EventSimConfig: jitter stds must be >= 0");
  if (tdc_resolution < 0)
    throw std::invalid_argument("EventSimConfig: tdc_resolution must be >= 0");
}

double slave_next_upflank(double t, const PhysicalParams& p) {
  if (!std::isfinite(t))
    throw std::invalid_argument("slave_next_upflank: non-finite t");
  const double T_S = p.T_S();
  const double offset = T_S * p.phi_S / two_pi;
  const double k = std::ceil((t + offset) / T_S);
  return k * T_S - offset;
}

namespace {

// Absolute event times reach ~N T_samp, so measurements recovered by
// differencing would lose ~ulp(N T_samp) in double; extended precision keeps
// the oracle comparison well below 1e-12 T_S.
long double next_upflank_ext(long double t, long double T_S,
                             long double offset) {
  const long double k = std::ceil((t + offset) / T_S);
  return k * T_S - offset;
}

}  // namespace

namespace {

double quantize(long double x, double res) {
  return static_cast<double>(res > 0 ? std::floor(x / res) * res : x);
}

// Random-walk slave clock: per-cycle Gaussian period deviations, clock time
// is the running sum. Tracks the time of the last emitted upflank. The walk
// starts two cycles before the first queried time; earlier accumulated phase
// is part of phi_S.
class SlaveClock {
 public:
  SlaveClock(const PhysicalParams& p, double period_std, const CounterRng& rng)
      : T_S_(p.T_S()),
        offset_(T_S_ * static_cast<long double>(p.phi_S) / two_pi),
        sigma_(period_std),
        rng_(rng) {}

  // Advance to the first upflank at or after t (never moves backward).
  long double advance_to(long double t) {
    if (!started_) {
      t_ = (std::ceil((t + offset_) / T_S_) - 2.0L) * T_S_ - offset_;
      started_ = true;
    }
    while (t_ < t) step();
    return t_;
  }
  // Move forward by `cycles` upflanks.
  long double advance_cycles(int64_t cycles) {
    for (int64_t i = 0; i < cycles; ++i) step();
    return t_;
  }

 private:
  void step() {
    long double dt = T_S_;
    if (sigma_ > 0) dt += sigma_ * rng_.normal(counter_++);
    if (dt <= 0) dt = std::numeric_limits<double>::min();  // clocks move forward
    t_ += dt;
  }
  long double T_S_;
  long double offset_;
  double sigma_;
  CounterRng rng_;
  long double t_ = 0.0L;
  bool started_ = false;
  uint64_t counter_ = 0;
};

}  // namespace

EventTrace run_protocol(const EventSimConfig& cfg) {
  cfg.validate();
  const PhysicalParams& p = cfg.params;
  const int n = cfg.n_pings;
  const double T_samp = p.T_samp();
  const double master_offset = p.T_M * p.phi_M / two_pi;
  const bool jittered = cfg.jitter.any();

  CounterRng rng(cfg.seed);
  const CounterRng rng_master = rng.substream(1);
  const CounterRng rng_fwd = rng.substream(2);
  const CounterRng rng_bwd = rng.substream(3);

  // Ping departures (every K-th master upflank) and arrivals, n+1 pings so
  // every slave TDC interval has its closing ping.
  std::vector<long double> dep(n + 1), arr(n + 1);
  long double t_dep = -static_cast<long double>(master_offset);
  const double stride_std =
      cfg.jitter.period_master * std::sqrt(static_cast<double>(p.K));
  for (int i = 0; i <= n; ++i) {
    if (i > 0) {
      long double stride = T_samp;
      if (stride_std > 0) stride += stride_std * rng_master.normal(i);
      t_dep += stride;
    }
    dep[i] = t_dep;
    long double flight = p.delta_fwd;
    if (cfg.jitter.delay_fwd > 0) flight += cfg.jitter.delay_fwd * rng_fwd.normal(i);
    arr[i] = dep[i] + flight;
  }

  SlaveClock slave(p, cfg.jitter.period_slave, rng.substream(4));

  EventTrace tr;
  tr.master_rtts.resize(n);
  tr.slave_tdc.resize(n);
  tr.ping_departures.assign(dep.begin(), dep.begin() + n);
  tr.ping_arrivals.assign(arr.begin(), arr.begin() + n);
  tr.pong_departures.resize(n);
  tr.pong_arrivals.resize(n);


  const long double T_S = p.T_S();
  const long double slave_offset = T_S * static_cast<long double>(p.phi_S) / two_pi;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < n; ++i) {
    long double read_time = jittered
                                ? slave.advance_to(arr[i])
                                : next_upflank_ext(arr[i], T_S, slave_offset);
    long double pong_dep = jittered
                               ? slave.advance_cycles(p.K0)
                               : read_time + static_cast<long double>(p.K0) * T_S;
    long double flight = p.delta_bwd;
    if (cfg.jitter.delay_bwd > 0) flight += cfg.jitter.delay_bwd * rng_bwd.normal(i);
    long double pong_arr = pong_dep + flight;

    tr.pong_departures[i] = static_cast<double>(pong_dep);
    tr.pong_arrivals[i] = static_cast<double>(pong_arr);
    if (pong_dep >= arr[i + 1]) {
      // Pong would leave after the next ping already arrived; out of model.
      tr.dropped.push_back(i);
      tr.master_rtts[i] = nan;
      tr.slave_tdc[i] = nan;
      continue;
    }
    tr.master_rtts[i] = quantize(pong_arr - dep[i], cfg.tdc_resolution);
    tr.slave_tdc[i] = quantize(arr[i + 1] - pong_dep, cfg.tdc_resolution);
  }
  return tr;
}

void write_event_trace_csv(const EventTrace& tr, std::ostream& os) {
  os << "n,ping_departure,ping_arrival,pong_departure,pong_arrival,rtt,"
        "slave_tdc\n";
  char buf[256];
  for (size_t i = 0; i < tr.master_rtts.size(); ++i) {
    std::snprintf(buf, sizeof buf,
                  "%zu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", i,
                  tr.ping_departures[i], tr.ping_arrivals[i],
                  tr.pong_departures[i], tr.pong_arrivals[i],
                  tr.master_rtts[i], tr.slave_tdc[i]);
    os << buf;
  }
}

}  // namespace sawtooth
