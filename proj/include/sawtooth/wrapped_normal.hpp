#pragma once

#include <cmath>

namespace sawtooth {

// Gaussian folded onto [0, 1): f(x) = sum_k normal_pdf(x + k; mu, sigma).
// The series is truncated at k_max terms each side; the adaptive default
// ceil(8 sigma) + 2 keeps the truncation error below 1e-12.
struct WrappedNormal {
  double mu;     // location in [0, 1) [cycles]
  double sigma;  // std [cycles], > 0
  int k_max;

  WrappedNormal(double mu_, double sigma_);
  WrappedNormal(double mu_, double sigma_, int k_max_);

  double pdf(double x) const;
  // trapezoid integral of pdf over [0,1) with `points` nodes
  double integral(int points = 1 << 14) const;
};

}  // namespace sawtooth
