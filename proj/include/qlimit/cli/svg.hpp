#pragma once

#include <string>
#include <vector>

namespace qlimit::cli {

struct PlotSeries {
  std::string label;
  std::string color;
  std::vector<double> y;
};

/// Log-log line plot: frame, decade ticks, one <polyline> per series and a
/// legend drawn with <line> swatches. Non-positive values are skipped.
std::string render_loglog_svg(const std::vector<double>& x, const std::vector<PlotSeries>& series,
                              const std::string& title, const std::string& y_label);

}  // namespace qlimit::cli
