#include "qlimit/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qlimit/certify.hpp"
#include "qlimit/cli/csv.hpp"
#include "qlimit/cli/svg.hpp"
#include "qlimit/error.hpp"
#include "qlimit/uncertainty.hpp"

namespace qlimit::cli {
namespace {

using namespace optomech;

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  const std::string resolved = resolve_output_path(path);
  std::ofstream f(resolved, std::ios::binary);
  if (!f) {
    throw ConfigError("cannot write '" + resolved + "'");
  }
  f << text;
}

SensitivityCurve run_sweep(const SweepRequest& req, bool parallel) {
  return parallel ? sweep_parallel(req) : sweep_serial(req);
}

std::size_t count_errors(const SensitivityCurve& c) {
  std::size_t n = 0;
  for (const auto& p : c.points) n += p.ok() ? 0 : 1;
  return n;
}

std::string format_complex(Complex z) {
  return format_number(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         format_number(std::abs(z.imag())) + "i";
}

}  // namespace

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    SweepRequest req;
    req.model = config.model;
    req.params = config.params;
    req.omegas = config.grid.points();
    req.lambda = config.lambda;
    const SensitivityCurve curve = run_sweep(req, config.parallel);

    std::ostringstream csv;
    write_sweep_csv(csv, curve);
    emit(config.output, csv.str(), out);

    if (const std::size_t bad = count_errors(curve); bad > 0) {
      const auto& first = *std::find_if(curve.points.begin(), curve.points.end(),
                                        [](const CurvePoint& p) { return !p.ok(); });
      err << "error: " << first.error << " at " << bad << " of " << curve.points.size()
          << " grid points\n";
      return kExitConfig;
    }
    if (curve.stability == Stability::Unstable) {
      err << "warning: drift matrix has eigenvalues with positive real part\n";
      return kExitUnstable;
    }
    if (curve.stability == Stability::NotApplicable) {
      err << "stability: not applicable (frequency-dependent feedback)\n";
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
  }
  return kExitConfig;
}

int cmd_fig2(char panel, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (panel != 'a' && panel != 'b') {
    err << "config error: panel must be 'a' or 'b'\n";
    return kExitConfig;
  }
  try {
    const bool force = panel == 'a';
    const std::vector<double> omegas = config.grid.points();

    SweepRequest blue;
    blue.model = ModelKind::Detuned;
    blue.params = fig2_detuned();
    blue.omegas = omegas;

    SweepRequest red;
    red.model = ModelKind::Locking;
    red.params = force ? fig2_locking_force() : fig2_locking_displacement();
    red.omegas = omegas;
    red.lambda.mode = force ? LambdaMode::OptimizeForce : LambdaMode::OptimizeDisplacement;

    const SensitivityCurve detuned = run_sweep(blue, config.parallel);
    const SensitivityCurve locking = run_sweep(red, config.parallel);

    std::ostringstream csv;
    write_fig2_csv(csv, detuned, locking);
    emit(config.output, csv.str(), out);

    if (!config.svg.empty()) {
      std::vector<PlotSeries> series{{"SQL", "grey", {}}, {"UQL", "green", {}},
                                     {"detuned cavity", "blue", {}},
                                     {"resonant + feedback", "red", {}}};
      for (std::size_t i = 0; i < omegas.size(); ++i) {
        const auto& d = detuned.points[i];
        const auto& l = locking.points[i];
        series[0].y.push_back(force ? d.sql_f : d.sql_q);
        series[1].y.push_back(force ? d.uql_f : d.uql_q);
        series[2].y.push_back(d.ok() ? (force ? d.s_f : d.s_q) : 0.0);
        series[3].y.push_back(l.ok() ? (force ? l.s_f : l.s_q) : 0.0);
      }
      const std::string svg =
          render_loglog_svg(omegas, series, force ? "(a) force sensitivity" : "(b) displacement sensitivity",
                            force ? "S_f" : "S_q");
      emit(config.svg, svg, out);
    }

    if (count_errors(detuned) + count_errors(locking) > 0) {
      err << "error: some grid points could not be evaluated\n";
      return kExitConfig;
    }
    err << "stability: detuned "
        << (detuned.stability == Stability::Stable ? "stable" : "unstable")
        << ", locking not applicable (frequency-dependent feedback)\n";
    return detuned.stability == Stability::Unstable ? kExitUnstable : kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
  }
  return kExitConfig;
}

int cmd_bounds(const RunConfig& config, const std::optional<DetectorNoiseModel>& injected,
               std::ostream& out, std::ostream& err) {
  if (!config.seed) {
    err << "config error: bounds mode requires a seed\n";
    return kExitConfig;
  }
  if (config.samples == 0) {
    err << "config error: samples must be at least 1\n";
    return kExitConfig;
  }
  CertifyConfig cc;
  cc.samples = config.samples;
  cc.seed = *config.seed;

  CertifyReport report;
  try {
    if (injected) {
      if (!is_physical(*injected)) {
        double worst = min_eigenvalue(uncertainty_matrix(*injected, 1));
        worst = std::min(worst, min_eigenvalue(uncertainty_matrix(*injected, -1)));
        std::ostringstream msg;
        msg << "rejected: injected model is not physical (min eigenvalue "
            << format_number(worst) << ")\n"
            << "model: " << to_json(*injected).dump() << '\n';
        emit(config.output, msg.str(), out);
        return kExitConfig;
      }
      report = certify_model(*injected, cc);
    } else {
      report = config.parallel ? certify_bounds_parallel(cc) : certify_bounds_serial(cc);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::ostringstream text;
  text << "samples: " << report.samples << '\n'
       << "probes: " << report.probes << '\n'
       << "seed: " << cc.seed << '\n'
       << "violations.inequality_chain: " << report.chain_violations << '\n'
       << "violations.added_above_bound: " << report.added_violations << '\n'
       << "violations.bound_above_uql: " << report.uql_violations << '\n';
  for (const auto& v : report.violations) {
    nlohmann::json j{{"sample", v.sample},
                     {"check", to_string(v.check)},
                     {"model", to_json(v.model)},
                     {"chi_qq", {v.chi_qq.real(), v.chi_qq.imag()}},
                     {"lhs", v.lhs},
                     {"rhs", v.rhs}};
    if (v.check == BoundCheck::AddedAboveBound) {
      j["g"] = v.gains.g;
      j["lambda"] = {v.gains.lambda.real(), v.gains.lambda.imag()};
    }
    text << "violation: " << j.dump() << '\n';
  }
  text << "verdict: " << (report.clean() ? "PASS" : "FAIL") << '\n';
  try {
    emit(config.output, text.str(), out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return report.clean() ? kExitOk : kExitBoundViolation;
}

int cmd_stability(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const LambdaMode mode = config.lambda.mode;
    if (mode == LambdaMode::OptimizeForce || mode == LambdaMode::OptimizeDisplacement) {
      out << "stability: not applicable (frequency-dependent feedback)\n";
      return kExitOk;
    }
    const Complex lambda = mode == LambdaMode::Fixed ? config.lambda.fixed : Complex{};
    const StateSpaceModel model = config.model == ModelKind::Detuned
                                      ? build_detuned_model(config.params)
                                      : build_locking_model(config.params, lambda);
    bool stable = false;
    try {
      stable = stability(model.drift);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotTimeInvariant) throw;
      out << "stability: not applicable (complex feedback value)\n";
      return kExitOk;
    }
    out << "model: " << to_string(model.kind) << '\n';
    const CVector ev = drift_eigenvalues(model.drift.real());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      out << "eigenvalue: " << format_complex(ev(i)) << '\n';
    }
    out << "stability: " << (stable ? "stable" : "unstable") << '\n';
    return stable ? kExitOk : kExitUnstable;
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
  }
  return kExitConfig;
}

}  // namespace qlimit::cli
