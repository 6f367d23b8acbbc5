#include "sawtooth/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sawtooth/fft.hpp"
#include "sawtooth/mod1.hpp"

namespace sawtooth {

const char* method_name(Method m) {
  switch (m) {
    case Method::PCP: return "PCP";
    case Method::LGS: return "LGS";
    case Method::GGS: return "GGS";
  }
  return "?";
}

void GridConfig::validate() const {
  if (beta_halfwidth < 0 || gamma_halfwidth <= 0)
    throw std::invalid_argument("GridConfig: halfwidths must be > 0");
  if (beta_points < 3 || gamma_points < 3 || gamma_points_global < 3)
    throw std::invalid_argument("GridConfig: point counts must be >= 3");
  if (beta_points % 2 == 0 || gamma_points % 2 == 0)
    throw std::invalid_argument("GridConfig: LGS point counts must be odd");
}

PsiModel PsiModel::clock_sync(const KnownPhysical& known) {
  PsiModel m;
  m.clock_sync_ = true;
  m.known_ = known;
  m.sign_ = -1.0;  // psi = -T_S < 0
  return m;
}

PsiModel PsiModel::known_amplitude(double psi) {
  if (psi == 0) throw std::invalid_argument("PsiModel: psi must be nonzero");
  PsiModel m;
  m.psi_known_ = psi;
  m.sign_ = psi < 0 ? -1.0 : 1.0;
  return m;
}

double PsiModel::psi(double beta) const {
  if (!clock_sync_) return psi_known_;
  const double f_d = beta / known_.T_samp;
  return -known_.T_M / (known_.T_M * f_d + 1.0);
}

double ls_offset(std::span<const double> y, double psi, double beta,
                 double gamma) {
  if (y.empty()) throw std::invalid_argument("ls_offset: empty trace");
  double acc = 0.0;
  for (size_t n = 0; n < y.size(); ++n)
    acc += y[n] - psi * mod1(beta * static_cast<double>(n) + gamma);
  return acc / static_cast<double>(y.size());
}

namespace {

// Prediction MSE over y[0..w) after the optimal offset (variance of the
// offset-free residual).
double objective_window(std::span<const double> y, size_t w, double psi,
                        double beta, double gamma) {
  w = std::min(w, y.size());
  double mean = ls_offset(y.first(w), psi, beta, gamma);
  double acc = 0.0;
  for (size_t n = 0; n < w; ++n) {
    double r = y[n] - mean - psi * mod1(beta * static_cast<double>(n) + gamma);
    acc += r * r;
  }
  return acc / static_cast<double>(w);
}

EstimationResult finalize(const Trace& t, const PsiModel& model, Method method,
                          double alpha, double psi, double beta, double gamma,
                          Diagnostics diag) {
  EstimationResult r;
  r.theta_hat = GenericParams{alpha, psi, beta, gamma};
  r.theta_hat.validate();
  r.objective = prediction_mse(t, r.theta_hat);
  r.method = method;
  r.diagnostics = diag;
  if (const KnownPhysical* k = model.knowns())
    r.physical_hat = generic_to_physical(r.theta_hat, *k);
  return r;
}

}  // namespace

EstimationResult pcp_estimate(const Trace& t, const PsiModel& model) {
  const auto& y = t.y;
  const size_t N = y.size();
  if (N < 16) throw std::invalid_argument("pcp_estimate: need N >= 16");

  double ybar = 0.0;
  for (double v : y) ybar += v;
  ybar /= static_cast<double>(N);
  std::vector<double> z(N);
  for (size_t n = 0; n < N; ++n) z[n] = y[n] - ybar;

  // Peak of the periodogram over bins 1..N/2; ties to the smaller bin.
  auto power = periodogram(z);
  size_t k_star = 1;
  for (size_t k = 2; k < power.size(); ++k)
    if (power[k] > power[k_star]) k_star = k;
  if (power[k_star] <= 0.0)
    throw std::runtime_error("pcp_estimate: flat trace, frequency undetectable");

  const double beta_mag = static_cast<double>(k_star) / static_cast<double>(N);
  const size_t period =
      std::clamp<size_t>(static_cast<size_t>(std::llround(1.0 / beta_mag)),
                         2, N);
  // At least one period and enough samples to localize the phase; a short
  // window also keeps the bin-quantization drift of beta negligible.
  const size_t window = std::min<size_t>(std::max<size_t>(period, 64), N);
  const size_t lags = std::max<size_t>(period, 64);

  double best_obj = 0.0;
  double best_alpha = 0.0, best_psi = 0.0, best_beta = 0.0, best_gamma = 0.0;
  bool have_best = false;
  for (int s = 0; s < 2; ++s) {
    const double beta_s = s == 0 ? wrap_half(beta_mag) : wrap_half(-beta_mag);
    // Circular correlation of the (sign-corrected) leading window against a
    // unit sawtooth template at each candidate phase.
    size_t l_star = 0;
    double c_star = -std::numeric_limits<double>::infinity();
    for (size_t l = 0; l < lags; ++l) {
      const double g = static_cast<double>(l) / static_cast<double>(lags);
      double corr = 0.0;
      for (size_t m = 0; m < window; ++m)
        corr += model.sign() * z[m] *
                (mod1(beta_s * static_cast<double>(m) + g) - 0.5);
      if (corr > c_star) {
        c_star = corr;
        l_star = l;
      }
    }
    const double gamma_s = static_cast<double>(l_star) / static_cast<double>(lags);
    const double psi_s = model.psi(beta_s);
    const double obj_s = objective_window(y, window, psi_s, beta_s, gamma_s);
    if (!have_best || obj_s < best_obj) {
      have_best = true;
      best_obj = obj_s;
      best_psi = psi_s;
      best_beta = beta_s;
      best_gamma = gamma_s;
    }
  }
  best_alpha = ls_offset(y, best_psi, best_beta, best_gamma);

  Diagnostics diag;
  diag.peak_bin = static_cast<int>(k_star);
  diag.gamma_points = static_cast<int>(lags);
  return finalize(t, model, Method::PCP, best_alpha, best_psi, best_beta,
                  best_gamma, diag);
}

EstimationResult lgs_estimate(const Trace& t, const EstimationResult& init,
                              const GridConfig& grid, const PsiModel& model) {
  grid.validate();
  init.theta_hat.validate();
  const auto& y = t.y;
  const size_t N = y.size();
  const double beta_hw =
      grid.beta_halfwidth > 0 ? grid.beta_halfwidth
                              : 2.0 / static_cast<double>(N);

  double best_obj = std::numeric_limits<double>::infinity();
  double best_alpha = 0.0, best_psi = 0.0, best_beta = 0.0, best_gamma = 0.0;
  for (int i = 0; i < grid.beta_points; ++i) {
    const double db = -beta_hw + 2.0 * beta_hw * static_cast<double>(i) /
                                     static_cast<double>(grid.beta_points - 1);
    const double beta = wrap_half(init.theta_hat.beta + db);
    const double psi = model.psi(beta);
    for (int j = 0; j < grid.gamma_points; ++j) {
      const double dg = -grid.gamma_halfwidth +
                        2.0 * grid.gamma_halfwidth * static_cast<double>(j) /
                            static_cast<double>(grid.gamma_points - 1);
      const double gamma = mod1(init.theta_hat.gamma + dg);
      double mean = ls_offset(y, psi, beta, gamma);
      double acc = 0.0;
      for (size_t n = 0; n < N; ++n) {
        double r =
            y[n] - mean - psi * mod1(beta * static_cast<double>(n) + gamma);
        acc += r * r;
      }
      const double obj = acc / static_cast<double>(N);
      if (obj < best_obj) {
        best_obj = obj;
        best_alpha = mean;
        best_psi = psi;
        best_beta = beta;
        best_gamma = gamma;
      }
    }
  }
  Diagnostics diag = init.diagnostics;
  diag.beta_points = grid.beta_points;
  diag.gamma_points = grid.gamma_points;
  return finalize(t, model, Method::LGS, best_alpha, best_psi, best_beta,
                  best_gamma, diag);
}

GgsResult ggs_estimate(const Trace& t, double psi_known, double beta_known,
                       int gamma_points_global) {
  if (gamma_points_global < 3)
    throw std::invalid_argument("ggs_estimate: need >= 3 grid points");
  const auto& y = t.y;
  const size_t N = y.size();
  if (N < 1) throw std::invalid_argument("ggs_estimate: empty trace");
  const int G = gamma_points_global;

  std::vector<double> obj(G);
  std::vector<double> offs(G);
  double min_obj = std::numeric_limits<double>::infinity();
  for (int k = 0; k < G; ++k) {
    const double gamma = static_cast<double>(k) / static_cast<double>(G);
    double mean = ls_offset(y, psi_known, beta_known, gamma);
    double acc = 0.0;
    for (size_t n = 0; n < N; ++n) {
      double r = y[n] - mean -
                 psi_known * mod1(beta_known * static_cast<double>(n) + gamma);
      acc += r * r;
    }
    obj[k] = acc / static_cast<double>(N);
    offs[k] = mean;
    min_obj = std::min(min_obj, obj[k]);
  }
  // The sigma_v = 0 coherent-sampling case makes the objective exactly flat
  // over the whole ambiguity plateau; report the median node of the
  // minimizing set (a unique minimum reduces this to the plain argmin).
  const double thr = min_obj * (1.0 + 1e-9);
  std::vector<int> tied;
  for (int k = 0; k < G; ++k)
    if (obj[k] <= thr) tied.push_back(k);
  const int pick = tied[(tied.size() - 1) / 2];

  GgsResult r;
  r.gamma_hat = static_cast<double>(pick) / static_cast<double>(G);
  r.alpha_hat = offs[pick];
  r.objective = obj[pick];
  r.gamma_points = G;
  return r;
}

double phase_error(double phi_hat, double phi_true) {
  const double d = phi_hat - phi_true;
  return d * d;
}

}  // namespace sawtooth
