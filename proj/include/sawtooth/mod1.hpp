#pragma once

#include <cmath>
#include <stdexcept>

namespace sawtooth {

// Wrap x into [0, 1). Exact for integer inputs. A rounding artifact of
// exactly 1.0 (possible when x is a hair below an integer) maps to 0.0 so
// the codomain invariant holds.
inline double mod1(double x) {
  if (!std::isfinite(x)) throw std::domain_error("mod1: non-finite input");
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

// Wrap into [-1/2, 1/2), the normalized-frequency range.
inline double wrap_half(double x) { return mod1(x + 0.5) - 0.5; }

}  // namespace sawtooth
