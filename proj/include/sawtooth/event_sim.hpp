#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sawtooth/params.hpp"

namespace sawtooth {

// Physical-level randomness: white per-cycle period jitter (clock time is the
// running sum, a random-walk clock) and per-pulse delay jitter.
struct JitterParams {
  double period_master = 0.0;  // std of each master period [s]
  double period_slave = 0.0;   // std of each slave period [s]
  double delay_fwd = 0.0;      // std of each ping flight time [s]
  double delay_bwd = 0.0;      // std of each pong flight time [s]

  bool any() const {
    return period_master > 0 || period_slave > 0 || delay_fwd > 0 ||
           delay_bwd > 0;
  }
};

struct EventSimConfig {
  PhysicalParams params;
  int n_pings = 1;
  JitterParams jitter;
  double tdc_resolution = 0.0;  // quantization step [s], 0 = ideal
  uint64_t seed = 0;

  void validate() const;
};

struct EventTrace {
  std::vector<double> master_rtts;      // pong_arrival - ping_departure
  std::vector<double> slave_tdc;        // next ping_arrival - pong_departure
  std::vector<double> ping_departures;
  std::vector<double> ping_arrivals;
  std::vector<double> pong_departures;
  std::vector<double> pong_arrivals;
  std::vector<int> dropped;  // ping indices whose pong would depart after the
                             // next ping (protocol-order violation)
};

// Time of the slave's next clock upflank at or after t (Delta >= 0; returns t
// itself when t is an upflank). Exact index arithmetic, no cycle iteration.
double slave_next_upflank(double t, const PhysicalParams& p);

// First-principles run of the two-node protocol. With zero jitter and zero
// TDC resolution the outputs equal the closed-form deterministic models.
EventTrace run_protocol(const EventSimConfig& cfg);

// Columns: n, ping_departure, ping_arrival, pong_departure, pong_arrival,
// rtt, slave_tdc.
void write_event_trace_csv(const EventTrace& tr, std::ostream& os);

}  // namespace sawtooth
