#include "sawtooth/wrapped_normal.hpp"

#include <numbers>
#include <stdexcept>

namespace sawtooth {

namespace {
int adaptive_k_max(double sigma) {
  return static_cast<int>(std::ceil(8.0 * sigma)) + 2;
}
}  // namespace

WrappedNormal::WrappedNormal(double mu_, double sigma_)
    : WrappedNormal(mu_, sigma_, adaptive_k_max(sigma_)) {}

WrappedNormal::WrappedNormal(double mu_, double sigma_, int k_max_)
    : mu(mu_), sigma(sigma_), k_max(k_max_) {
  if (sigma <= 0) throw std::invalid_argument("WrappedNormal: sigma must be > 0");
  if (k_max < 1) throw std::invalid_argument("WrappedNormal: k_max must be >= 1");
}

double WrappedNormal::pdf(double x) const {
  const double inv = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  double acc = 0.0;
  for (int k = -k_max; k <= k_max; ++k) {
    const double d = (x + static_cast<double>(k) - mu) / sigma;
    acc += inv * std::exp(-0.5 * d * d);
  }
  return acc;
}

double WrappedNormal::integral(int points) const {
  // Trapezoid over one period; endpoints coincide by periodicity.
  const double h = 1.0 / static_cast<double>(points);
  double acc = 0.5 * (pdf(0.0) + pdf(1.0));
  for (int i = 1; i < points; ++i) acc += pdf(i * h);
  return acc * h;
}

}  // namespace sawtooth
