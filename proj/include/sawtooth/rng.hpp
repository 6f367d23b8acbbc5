#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace sawtooth {

namespace detail {
inline uint64_t splitmix(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001B3ULL;
  return h;
}
}  // namespace detail

// Counter-addressable generator: sample i of a stream is a pure function of
// (key, i), so evaluation order and worker count never change a result.
class CounterRng {
 public:
  explicit CounterRng(uint64_t key) : key_(key) {}

  // in [0, 1)
  double uniform(uint64_t ctr) const {
    return static_cast<double>(word(ctr) >> 11) * 0x1.0p-53;
  }
  double uniform(uint64_t ctr, double lo, double hi) const {
    return lo + (hi - lo) * uniform(ctr);
  }
  // standard normal via Box-Muller; consumes counters 2*ctr and 2*ctr+1
  double normal(uint64_t ctr) const {
    double u1 = static_cast<double>((word(2 * ctr) >> 11) + 1) * 0x1.0p-53;  // (0,1]
    double u2 = static_cast<double>(word(2 * ctr + 1) >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }
  CounterRng substream(uint64_t tag) const {
    return CounterRng(detail::splitmix(key_ ^ detail::splitmix(~tag)));
  }
  uint64_t key() const { return key_; }

 private:
  uint64_t word(uint64_t ctr) const {
    return detail::splitmix(key_ ^ detail::splitmix(ctr));
  }
  uint64_t key_;
};

// Stream key for one Monte Carlo task: hash(master_seed, experiment_id, index).
inline uint64_t derive_key(uint64_t master_seed, std::string_view experiment_id,
                           uint64_t index) {
  uint64_t k = detail::splitmix(master_seed ^ detail::fnv1a(experiment_id));
  return detail::splitmix(k ^ detail::splitmix(index));
}

}  // namespace sawtooth
