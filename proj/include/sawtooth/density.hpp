#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sawtooth/params.hpp"

namespace sawtooth {

// A density tabulated on a uniform grid over [lo, hi].
struct DensityGrid {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> values;

  double step() const {
    return (hi - lo) / static_cast<double>(values.size() - 1);
  }
  double integral() const;  // trapezoid
  double mean() const;
  double mode() const;  // grid point of the maximum value
};

inline constexpr int kDensityGridPoints = 1 << 14;

// Density of P[n] = alpha + psi mod1(beta n + gamma + V[n]) for sigma_v > 0:
// the wrapped normal with mode mod1(beta n + gamma), affinely rescaled onto
// the support between alpha and alpha + psi. Throws for sigma_v = 0.
DensityGrid p_pdf(const GenericParams& g, double sigma_v, int64_t n,
                  int grid_points = kDensityGridPoints);

// Density of Y[n] = W[n] + P[n]: p_pdf convolved with N(0, sigma_w^2) by
// direct summation on the grid; returns p_pdf unchanged when sigma_w = 0.
DensityGrid y_pdf(const GenericParams& g, const NoiseParams& nz, int64_t n,
                  int grid_points = kDensityGridPoints);

struct DistanceResult {
  double l1 = 0.0;        // max over n of int |f1 - f2|
  double tv = 0.0;        // total variation = l1 / 2
  bool mean_mode = false; // true when sigma_v = 0 (mean-vector comparison)
};

// Max over n in n_set of the L1 distance between the Y[n] densities of the
// two parameter vectors, on a common grid spanning both supports. With
// sigma_v = 0 the distribution is Gaussian with parameter-free covariance,
// so the comparison falls back to max |mu1[n] - mu2[n]|.
DistanceResult distribution_distance(const GenericParams& g1,
                                     const GenericParams& g2,
                                     const NoiseParams& nz,
                                     std::span<const int64_t> n_set,
                                     int grid_points = kDensityGridPoints);

// Columns: x, f_theta1, f_theta2, absdiff (densities on a common grid).
void write_density_csv(const GenericParams& g1, const GenericParams& g2,
                       const NoiseParams& nz, int64_t n, std::ostream& os,
                       int grid_points = kDensityGridPoints);

}  // namespace sawtooth
