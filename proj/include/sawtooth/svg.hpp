#pragma once

#include <string>
#include <vector>

#include "sawtooth/results.hpp"

namespace sawtooth {

// Reference line to draw across the plot, labeled.
struct RefLine {
  double y_db;
  std::string label;
};

// Self-contained SVG: one series per (estimator, metric) pair found in the
// rows, y in dB, plus labeled reference lines.
std::string render_svg(const std::vector<ResultRow>& rows,
                       const std::string& title, const std::string& x_label,
                       const std::vector<RefLine>& refs, bool log_x);

// Reference lines matching the error-metric conventions of each MSE metric.
std::vector<RefLine> reference_lines_for(const std::string& metric);

}  // namespace sawtooth
