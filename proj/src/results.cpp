#include "sawtooth/results.hpp"

#include <cmath>
#include <cstdio>

namespace sawtooth {

namespace {
std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
}  // namespace

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::string out =
      "experiment,sweep_name,sweep_value,estimator,metric,value,value_db,"
      "reps,seed,sem\n";
  for (const ResultRow& r : rows) {
    out += r.experiment;
    out += ',';
    out += r.sweep_name;
    out += ',';
    out += fmt_double(r.sweep_value);
    out += ',';
    out += r.estimator;
    out += ',';
    out += r.metric;
    out += ',';
    out += fmt_double(r.value);
    out += ',';
    if (r.value > 0.0) out += fmt_double(10.0 * std::log10(r.value));
    out += ',';
    out += std::to_string(r.reps);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += fmt_double(r.sem);
    out += '\n';
  }
  return out;
}

MeanSem mean_sem(const std::vector<double>& xs) {
  MeanSem ms;
  const double n = static_cast<double>(xs.size());
  if (xs.empty()) return ms;
  for (double x : xs) ms.mean += x;
  ms.mean /= n;
  if (xs.size() < 2) return ms;
  double var = 0.0;
  for (double x : xs) var += (x - ms.mean) * (x - ms.mean);
  var /= (n - 1.0);
  ms.sem = std::sqrt(var / n);
  return ms;
}

}  // namespace sawtooth
