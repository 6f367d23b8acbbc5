#include "sawtooth/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

namespace sawtooth {

std::vector<RefLine> reference_lines_for(const std::string& metric) {
  auto db = [](double v) { return 10.0 * std::log10(v); };
  if (metric == "mse_rho_m2")
    return {{db(1e-4), "1 cm"}, {db(1e-6), "0.1 cm"}};
  if (metric == "mse_fd_Hz2")
    return {{db(1.0), "1 Hz (10 ppb)"}, {db(0.01), "0.1 Hz (1 ppb)"}};
  if (metric == "mse_phase_rad2")
    return {{db(0.3947841760435743), "(2pi/10)^2"},
            {db(0.003947841760435743), "(2pi/100)^2"}};
  return {};
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<ResultRow>& rows,
                       const std::string& title, const std::string& x_label,
                       const std::vector<RefLine>& refs, bool log_x) {
  const int width = 860, height = 560;
  const int ml = 70, mr = 200, mt = 40, mb = 55;
  const double pw = width - ml - mr, ph = height - mt - mb;

  // series keyed by "estimator metric"
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const ResultRow& r : rows) {
    if (r.value <= 0.0) continue;  // exact zeros have no dB point
    const double x = log_x ? std::log10(r.sweep_value) : r.sweep_value;
    const double y = 10.0 * std::log10(r.value);
    series[r.estimator + " " + r.metric].push_back({x, y});
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  for (const RefLine& rl : refs) {
    ymin = std::min(ymin, rl.y_db);
    ymax = std::max(ymax, rl.y_db);
  }
  if (series.empty()) {
    xmin = 0; xmax = 1; ymin = -1; ymax = 1;
  }
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
       std::to_string(width) + "\" height=\"" + std::to_string(height) +
       "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + std::to_string(ml) + "\" y=\"24\" font-size=\"15\">" +
       title + "</text>\n";

  // frame and ticks
  s += "<rect x=\"" + fmt(ml) + "\" y=\"" + fmt(mt) + "\" width=\"" + fmt(pw) +
       "\" height=\"" + fmt(ph) + "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int i = 0; i <= 6; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 6.0;
    const double yv = ymin + (ymax - ymin) * i / 6.0;
    s += "<line x1=\"" + fmt(px(xv)) + "\" y1=\"" + fmt(mt) + "\" x2=\"" +
         fmt(px(xv)) + "\" y2=\"" + fmt(mt + ph) +
         "\" stroke=\"#ddd\" stroke-dasharray=\"3,3\"/>\n";
    s += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(py(yv)) + "\" x2=\"" +
         fmt(ml + pw) + "\" y2=\"" + fmt(py(yv)) +
         "\" stroke=\"#ddd\" stroke-dasharray=\"3,3\"/>\n";
    const double xlab = log_x ? std::pow(10.0, xv) : xv;
    s += "<text x=\"" + fmt(px(xv)) + "\" y=\"" + fmt(mt + ph + 18) +
         "\" text-anchor=\"middle\">" + fmt(xlab) + "</text>\n";
    s += "<text x=\"" + fmt(ml - 8) + "\" y=\"" + fmt(py(yv) + 4) +
         "\" text-anchor=\"end\">" + fmt(yv) + "</text>\n";
  }
  s += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(height - 12) +
       "\" text-anchor=\"middle\">" + x_label + "</text>\n";
  s += "<text x=\"18\" y=\"" + fmt(mt + ph / 2) +
       "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       fmt(mt + ph / 2) + ")\">dB</text>\n";

  for (const RefLine& rl : refs) {
    s += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(py(rl.y_db)) + "\" x2=\"" +
         fmt(ml + pw) + "\" y2=\"" + fmt(py(rl.y_db)) +
         "\" stroke=\"#555\" stroke-dasharray=\"8,4\"/>\n";
    s += "<text x=\"" + fmt(ml + pw - 4) + "\" y=\"" + fmt(py(rl.y_db) - 4) +
         "\" text-anchor=\"end\" fill=\"#555\">" + rl.label + "</text>\n";
  }

  int idx = 0, ly = mt + 10;
  for (auto& [name, pts] : series) {
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    const char* color = kPalette[idx % 8];
    std::string poly;
    for (auto& [x, y] : sorted)
      poly += fmt(px(x)) + "," + fmt(py(y)) + " ";
    s += "<polyline points=\"" + poly + "\" fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"1.6\"/>\n";
    for (auto& [x, y] : sorted)
      s += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
           "\" r=\"2.4\" fill=\"" + color + "\"/>\n";
    s += "<line x1=\"" + fmt(ml + pw + 10) + "\" y1=\"" + fmt(ly) + "\" x2=\"" +
         fmt(ml + pw + 34) + "\" y2=\"" + fmt(ly) + "\" stroke=\"" + color +
         "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + fmt(ml + pw + 40) + "\" y=\"" + fmt(ly + 4) + "\">" +
         name + "</text>\n";
    ly += 18;
    ++idx;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace sawtooth
