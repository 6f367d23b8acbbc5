#pragma once

#include <cstdint>
#include <utility>

#include "sawtooth/params.hpp"

namespace sawtooth {

// eps_plus = 1 - max_{0 <= n < N} mod1(beta n + gamma); strictly positive.
double epsilon_plus(double beta, double gamma, int64_t n_samples);

// Coherent-sampling limit for beta = M/Q with gcd(M, Q) = 1: the sampled
// orbit is Q-periodic, so epsilon_plus stops shrinking at N = Q.
double epsilon_plus_limit(int64_t M, int64_t Q, double gamma);

// The unidentifiable pair: theta1 = (alpha + psi eps, psi, beta, gamma) and
// theta2 = (alpha, psi, beta, gamma + eps). Valid for 0 <= eps <
// epsilon_plus(beta, gamma, n_samples); their mean vectors over
// n = 0..n_samples-1 coincide.
std::pair<GenericParams, GenericParams> ambiguous_pair(const GenericParams& g,
                                                       double eps,
                                                       int64_t n_samples);

// Mean vector entry mu_theta[n] = alpha + psi mod1(beta n + gamma).
double mean_at(const GenericParams& g, int64_t n);

}  // namespace sawtooth
