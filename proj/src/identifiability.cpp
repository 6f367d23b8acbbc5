#include "sawtooth/identifiability.hpp"

#include <numeric>
#include <stdexcept>

#include "sawtooth/mod1.hpp"

namespace sawtooth {

double mean_at(const GenericParams& g, int64_t n) {
  return g.alpha + g.psi * mod1(g.beta * static_cast<double>(n) + g.gamma);
}

double epsilon_plus(double beta, double gamma, int64_t n_samples) {
  if (n_samples < 1)
    throw std::invalid_argument("epsilon_plus: N must be >= 1");
  double m = 0.0;
  for (int64_t n = 0; n < n_samples; ++n) {
    const double v = mod1(beta * static_cast<double>(n) + gamma);
    if (v > m) m = v;
  }
  return 1.0 - m;
}

double epsilon_plus_limit(int64_t M, int64_t Q, double gamma) {
  if (M < 1 || Q < 2 || 2 * M > Q)
    throw std::invalid_argument("epsilon_plus_limit: need 1 <= M <= Q/2");
  if (std::gcd(M, Q) != 1)
    throw std::invalid_argument("epsilon_plus_limit: M and Q must be co-prime");
  return epsilon_plus(static_cast<double>(M) / static_cast<double>(Q), gamma,
                      Q);
}

std::pair<GenericParams, GenericParams> ambiguous_pair(const GenericParams& g,
                                                       double eps,
                                                       int64_t n_samples) {
  g.validate();
  if (eps < 0 || eps >= epsilon_plus(g.beta, g.gamma, n_samples))
    throw std::invalid_argument(
        "ambiguous_pair: eps must lie in [0, epsilon_plus)");
  GenericParams g1 = g;
  g1.alpha = g.alpha + g.psi * eps;
  GenericParams g2 = g;
  g2.gamma = g.gamma + eps;  // < 1 because eps < eps_plus <= 1 - gamma
  g1.validate();
  g2.validate();
  return {g1, g2};
}

}  // namespace sawtooth
