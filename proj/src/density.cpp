#include "sawtooth/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "sawtooth/identifiability.hpp"
#include "sawtooth/mod1.hpp"
#include "sawtooth/wrapped_normal.hpp"

namespace sawtooth {

double DensityGrid::integral() const {
  const double h = step();
  double acc = 0.5 * (values.front() + values.back());
  for (size_t i = 1; i + 1 < values.size(); ++i) acc += values[i];
  return acc * h;
}

double DensityGrid::mean() const {
  const double h = step();
  auto x = [&](size_t i) { return lo + h * static_cast<double>(i); };
  double acc = 0.5 * (x(0) * values.front() +
                      x(values.size() - 1) * values.back());
  for (size_t i = 1; i + 1 < values.size(); ++i) acc += x(i) * values[i];
  return acc * h;
}

double DensityGrid::mode() const {
  size_t best = 0;
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return lo + step() * static_cast<double>(best);
}

namespace {

// Density of P[n] at x; zero outside the support between alpha and
// alpha + psi.
double p_density_at(const GenericParams& g, const WrappedNormal& wn,
                    double x) {
  const double u = (x - g.alpha) / g.psi;
  if (u < 0.0 || u >= 1.0) return 0.0;
  return wn.pdf(u) / std::fabs(g.psi);
}

DensityGrid sample_grid(const GenericParams& g, const WrappedNormal& wn,
                        double lo, double hi, int points) {
  DensityGrid d;
  d.lo = lo;
  d.hi = hi;
  d.values.resize(points);
  const double h = (hi - lo) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i)
    d.values[i] = p_density_at(g, wn, lo + h * static_cast<double>(i));
  return d;
}

// Gaussian smoothing by direct summation on the uniform grid; the kernel is
// truncated at 8 sigma (tail mass < 1e-15).
void convolve_gaussian(DensityGrid& d, double sigma_w) {
  const double h = d.step();
  const int half = static_cast<int>(std::ceil(8.0 * sigma_w / h));
  std::vector<double> kernel(2 * half + 1);
  const double inv = 1.0 / (sigma_w * std::sqrt(2.0 * std::numbers::pi));
  for (int k = -half; k <= half; ++k) {
    const double d0 = static_cast<double>(k) * h / sigma_w;
    kernel[k + half] = inv * std::exp(-0.5 * d0 * d0) * h;
  }
  const int n = static_cast<int>(d.values.size());
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double v = d.values[i];
    if (v == 0.0) continue;
    const int k0 = std::max(-half, -i);
    const int k1 = std::min(half, n - 1 - i);
    for (int k = k0; k <= k1; ++k) out[i + k] += v * kernel[k + half];
  }
  d.values = std::move(out);
}

void support(const GenericParams& g, double* lo, double* hi) {
  *lo = std::min(g.alpha, g.alpha + g.psi);
  *hi = std::max(g.alpha, g.alpha + g.psi);
}

}  // namespace

DensityGrid p_pdf(const GenericParams& g, double sigma_v, int64_t n,
                  int grid_points) {
  g.validate();
  if (sigma_v <= 0)
    throw std::invalid_argument(
        "p_pdf: sigma_v = 0 is a point-mass distribution; use mean vectors");
  const WrappedNormal wn(mod1(g.beta * static_cast<double>(n) + g.gamma),
                         sigma_v);
  double lo, hi;
  support(g, &lo, &hi);
  return sample_grid(g, wn, lo, hi, grid_points);
}

DensityGrid y_pdf(const GenericParams& g, const NoiseParams& nz, int64_t n,
                  int grid_points) {
  nz.validate();
  if (nz.sigma_w == 0.0) return p_pdf(g, nz.sigma_v, n, grid_points);
  g.validate();
  if (nz.sigma_v <= 0)
    throw std::invalid_argument(
        "y_pdf: sigma_v = 0 is a plain Gaussian; use mean vectors");
  const WrappedNormal wn(mod1(g.beta * static_cast<double>(n) + g.gamma),
                         nz.sigma_v);
  double lo, hi;
  support(g, &lo, &hi);
  DensityGrid d = sample_grid(g, wn, lo - 8.0 * nz.sigma_w,
                              hi + 8.0 * nz.sigma_w, grid_points);
  convolve_gaussian(d, nz.sigma_w);
  return d;
}

namespace {

// Common grid hull for two parameter vectors (plus Gaussian padding).
void common_hull(const GenericParams& g1, const GenericParams& g2,
                 double sigma_w, double* lo, double* hi) {
  double lo1, hi1, lo2, hi2;
  support(g1, &lo1, &hi1);
  support(g2, &lo2, &hi2);
  *lo = std::min(lo1, lo2) - 8.0 * sigma_w;
  *hi = std::max(hi1, hi2) + 8.0 * sigma_w;
  if (*hi <= *lo) *hi = *lo + 1.0;
}

DensityGrid y_on_grid(const GenericParams& g, const NoiseParams& nz, int64_t n,
                      double lo, double hi, int points) {
  const WrappedNormal wn(mod1(g.beta * static_cast<double>(n) + g.gamma),
                         nz.sigma_v);
  DensityGrid d = sample_grid(g, wn, lo, hi, points);
  if (nz.sigma_w > 0) convolve_gaussian(d, nz.sigma_w);
  return d;
}

}  // namespace

DistanceResult distribution_distance(const GenericParams& g1,
                                     const GenericParams& g2,
                                     const NoiseParams& nz,
                                     std::span<const int64_t> n_set,
                                     int grid_points) {
  g1.validate();
  g2.validate();
  nz.validate();
  if (n_set.empty())
    throw std::invalid_argument("distribution_distance: empty n_set");

  DistanceResult res;
  if (nz.sigma_v == 0.0) {
    // Gaussian with parameter-free covariance: only the mean identifies.
    res.mean_mode = true;
    double worst = 0.0;
    for (int64_t n : n_set)
      worst = std::max(worst, std::fabs(mean_at(g1, n) - mean_at(g2, n)));
    res.l1 = worst;
    res.tv = worst / 2.0;
    return res;
  }

  double lo, hi;
  common_hull(g1, g2, nz.sigma_w, &lo, &hi);
  double worst = 0.0;
  for (int64_t n : n_set) {
    DensityGrid d1 = y_on_grid(g1, nz, n, lo, hi, grid_points);
    DensityGrid d2 = y_on_grid(g2, nz, n, lo, hi, grid_points);
    double acc = 0.5 * (std::fabs(d1.values.front() - d2.values.front()) +
                        std::fabs(d1.values.back() - d2.values.back()));
    for (size_t i = 1; i + 1 < d1.values.size(); ++i)
      acc += std::fabs(d1.values[i] - d2.values[i]);
    worst = std::max(worst, acc * d1.step());
  }
  res.l1 = worst;
  res.tv = worst / 2.0;
  return res;
}

void write_density_csv(const GenericParams& g1, const GenericParams& g2,
                       const NoiseParams& nz, int64_t n, std::ostream& os,
                       int grid_points) {
  double lo, hi;
  common_hull(g1, g2, nz.sigma_w, &lo, &hi);
  DensityGrid d1 = y_on_grid(g1, nz, n, lo, hi, grid_points);
  DensityGrid d2 = y_on_grid(g2, nz, n, lo, hi, grid_points);
  os << "x,f_theta1,f_theta2,absdiff\n";
  char buf[160];
  for (int i = 0; i < grid_points; ++i) {
    const double x = lo + d1.step() * static_cast<double>(i);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x,
                  d1.values[i], d2.values[i],
                  std::fabs(d1.values[i] - d2.values[i]));
    os << buf;
  }
}

}  // namespace sawtooth
