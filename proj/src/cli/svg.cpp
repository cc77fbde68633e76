#include "qlimit/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>


namespace qlimit::cli {
namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (v > 0 && std::isfinite(v)) {
      lo = std::min(lo, std::log10(v));
      hi = std::max(hi, std::log10(v));
    }
  }
  void widen() {
    if (!std::isfinite(lo)) { lo = 0; hi = 1; }
    lo = std::floor(lo);
    hi = std::ceil(hi);
    if (hi <= lo) hi = lo + 1;
  }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

}  // namespace

std::string render_loglog_svg(const std::vector<double>& x, const std::vector<PlotSeries>& series,
                              const std::string& title, const std::string& y_label) {
  Range rx, ry;
  for (double v : x) rx.add(v);
  for (const auto& s : series) for (double v : s.y) ry.add(v);
  rx.widen();
  ry.widen();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (std::log10(v) - rx.lo) / (rx.hi - rx.lo) * pw; };
  auto py = [&](double v) { return kTop + (ry.hi - std::log10(v)) / (ry.hi - ry.lo) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
    << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" fill=\"white\"/>\n";
  o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"24\" text-anchor=\"middle\">" << title
    << "</text>\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int d = static_cast<int>(rx.lo); d <= static_cast<int>(rx.hi); ++d) {
    const double xx = kLeft + (d - rx.lo) / (rx.hi - rx.lo) * pw;
    o << "<line x1=\"" << fmt(xx) << "\" y1=\"" << kTop + ph << "\" x2=\"" << fmt(xx)
      << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt(xx) << "\" y=\"" << kTop + ph + 20
      << "\" text-anchor=\"middle\">1e" << d << "</text>\n";
  }
  for (int d = static_cast<int>(ry.lo); d <= static_cast<int>(ry.hi); ++d) {
    const double yy = kTop + (ry.hi - d) / (ry.hi - ry.lo) * ph;
    o << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt(yy) << "\" x2=\"" << kLeft
      << "\" y2=\"" << fmt(yy) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(yy + 4)
      << "\" text-anchor=\"end\">1e" << d << "</text>\n";
  }
  o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15
    << "\" text-anchor=\"middle\">omega</text>\n";
  o << "<text x=\"20\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
    << kTop + ph / 2 << ")\">" << y_label << "</text>\n";

  for (const auto& s : series) {
    o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < x.size() && i < s.y.size(); ++i) {
      if (!(x[i] > 0) || !(s.y[i] > 0) || !std::isfinite(s.y[i])) continue;
      o << (first ? "" : " ") << fmt(px(x[i])) << ',' << fmt(py(s.y[i]));
      first = false;
    }
    o << "\"/>\n";
  }

  double ly = kTop + 10;
  const double lx = kLeft + pw + 15;
  for (const auto& s : series) {
    o << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 25 << "\" y2=\"" << ly
      << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << lx + 32 << "\" y=\"" << ly + 4 << "\">" << s.label << "</text>\n";
    ly += 20;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace qlimit::cli
