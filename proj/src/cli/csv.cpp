#include "qlimit/cli/csv.hpp"

#include <cstdio>

namespace qlimit::cli {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const optomech::SensitivityCurve& curve) {
  out << kSweepHeader << '\n';
  const char* stable = optomech::to_string(curve.stability);
  for (const auto& p : curve.points) {
    if (!p.ok()) {
      out << "ERROR:" << p.error << '\n';
      continue;
    }
    for (double v : {p.omega, p.s_f, p.s_q, p.sql_f, p.uql_f, p.sql_q, p.uql_q,
                     p.lambda.real(), p.lambda.imag()}) {
      out << format_number(v) << ',';
    }
    out << stable << '\n';
  }
}

void write_fig2_csv(std::ostream& out, const optomech::SensitivityCurve& detuned,
                    const optomech::SensitivityCurve& locking) {
  out << kFig2Header << '\n';
  for (std::size_t i = 0; i < detuned.points.size(); ++i) {
    const auto& d = detuned.points[i];
    const auto& l = locking.points[i];
    if (!d.ok() || !l.ok()) {
      out << "ERROR:" << (d.ok() ? l.error : d.error) << '\n';
      continue;
    }
    const double row[] = {d.omega, d.sql_f, d.uql_f, d.sql_q, d.uql_q, d.s_f,
                          d.s_q,   l.s_f,   l.s_q,   l.lambda.real(), l.lambda.imag()};
    for (std::size_t k = 0; k < std::size(row); ++k) {
      out << (k ? "," : "") << format_number(row[k]);
    }
    out << '\n';
  }
}

}  // namespace qlimit::cli
