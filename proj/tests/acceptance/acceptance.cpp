// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "qlimit/added_noise.hpp"
#include "qlimit/certify.hpp"
#include "qlimit/cli/commands.hpp"
#include "qlimit/cli/config.hpp"
#include "qlimit/numeric_optimum.hpp"
#include "qlimit/optomech/sweep.hpp"
#include "qlimit/susceptibility.hpp"
#include "qlimit/uncertainty.hpp"

using namespace qlimit;
using namespace qlimit::optomech;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_s;
  const bool pass = o.pass && in_time;
  failures += pass ? 0 : 1;
  std::printf("[%s] %s %s (%.3f s, limit %.0f s) %s%s\n", pass ? "PASS" : "FAIL", id, title, s,
              limit_s, o.detail.c_str(), in_time ? "" : " [too slow]");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

SensitivityCurve sweep(ModelKind kind, const OptomechParams& p, LambdaPolicy policy) {
  SweepRequest r;
  r.model = kind;
  r.params = p;
  r.omegas = FrequencyGrid{}.points();
  r.lambda = policy;
  return sweep_parallel(r);
}

OptomechParams resonant() {
  OptomechParams p = fig2_detuned();
  p.detuning = 0.0;
  return p;
}

// margins of S_f - UQL_f, S_q - UQL_q and S_q |kappa|^2 - UQL_q
struct Margins {
  double force = INFINITY, disp = INFINITY, generalized = INFINITY;
  std::size_t errors = 0, points = 0;
};

Margins margins(const SensitivityCurve& c) {
  Margins m;
  for (const auto& p : c.points) {
    ++m.points;
    if (!p.ok()) {
      ++m.errors;
      continue;
    }
    m.force = std::min(m.force, p.s_f - p.uql_f);
    m.disp = std::min(m.disp, p.s_q - p.uql_q);
    m.generalized = std::min(m.generalized, p.s_q * std::norm(p.loop_factor) - p.uql_q);
  }
  return m;
}

}  // namespace

int main() {
  run("AC1", "boundary model optimum", 1.0, [] {
    DetectorNoiseModel m;
    m.s_yy = m.s_zz = 0.5;
    m.s_ff = 1.0;
    const Complex chi{0.0, 1.0};
    const double bound = analytic_optimum_bound(m, chi);
    const double numeric = numeric_optimum(m, chi).value;
    const bool ok = std::abs(bound - 1.0) < 5e-4 && numeric <= 1.001 && numeric >= bound - 1e-9;
    return Outcome{ok, fmt("bound=%.6f numeric=%.6f", bound, numeric)};
  });

  run("AC2", "random models obey the bound chain", 60.0, [] {
    CertifyConfig c;
    c.samples = 10000;
    c.probes_per_sample = 10;
    c.seed = 20240601;
    const CertifyReport r = certify_bounds_parallel(c);
    std::ostringstream d;
    d << "samples=" << r.samples << " probes=" << r.probes << " chain=" << r.chain_violations
      << " added=" << r.added_violations << " uql=" << r.uql_violations;
    return Outcome{r.clean() && r.samples == 10000 && r.probes == 100000, d.str()};
  });

  run("AC3", "state-space susceptibility vs closed form", 1.0, [] {
    OptomechParams p = fig2_detuned();
    p.coupling = 0.0;
    const StateSpaceModel m = build_detuned_model(p);
    double worst = 0.0;
    const auto omegas = FrequencyGrid{}.points();
    for (double w : omegas) {
      const Complex exact = mech_susceptibility(p.mech_frequency, p.mech_damping, w);
      worst = std::max(worst, std::abs(transfer_at(m, w)(idx::q, idx::p) - exact) / std::abs(exact));
    }
    return Outcome{worst < 1e-10 && omegas.size() == 400, fmt("max_rel_err=%.3e", worst)};
  });

  run("AC4", "force sensitivity never beats the UQL", 120.0, [] {
    const Margins a = margins(sweep(ModelKind::Detuned, fig2_detuned(), {}));
    const Margins b = margins(
        sweep(ModelKind::Locking, fig2_locking_force(), {LambdaMode::OptimizeForce, {}}));
    const bool ok = a.errors == 0 && b.errors == 0 && a.points == 400 && b.points == 400 &&
                    a.force >= -1e-9 && b.force >= -1e-9;
    return Outcome{ok, fmt("min(S_f-UQL): detuned=%.3e locking=%.3e", a.force, b.force)};
  });

  run("AC5", "displacement sensitivity beats the UQL", 120.0, [] {
    const auto count_below = [](const SensitivityCurve& c) {
      int n = 0;
      for (const auto& p : c.points) n += p.ok() && p.s_q < p.uql_q ? 1 : 0;
      return n;
    };
    const int a = count_below(sweep(ModelKind::Detuned, fig2_detuned(), {}));
    const int b = count_below(sweep(ModelKind::Locking, fig2_locking_displacement(),
                                    {LambdaMode::OptimizeDisplacement, {}}));
    return Outcome{a > 0 && b > 0, fmt("points below UQL: detuned=%.0f locking=%.0f", a, b)};
  });

  run("AC6", "resonant readout without feedback respects the UQL", 5.0, [] {
    const Margins a = margins(sweep(ModelKind::Detuned, resonant(), {}));
    const Margins b = margins(sweep(ModelKind::Locking, fig2_locking_displacement(), {}));
    const bool ok = a.errors == 0 && b.errors == 0 && a.points == 400 && b.points == 400 &&
                    a.disp >= -1e-9 && b.disp >= -1e-9;
    return Outcome{ok, fmt("min(S_q-UQL): detuned=%.3e locking=%.3e", a.disp, b.disp)};
  });

  run("AC7", "generalized displacement bound", 60.0, [] {
    double worst = INFINITY;
    std::size_t errors = 0, points = 0;
    const auto add = [&](const SensitivityCurve& c) {
      const Margins m = margins(c);
      worst = std::min(worst, m.generalized);
      errors += m.errors;
      points += m.points;
    };
    add(sweep(ModelKind::Detuned, fig2_detuned(), {}));
    add(sweep(ModelKind::Detuned, resonant(), {}));
    add(sweep(ModelKind::Locking, fig2_locking_force(), {LambdaMode::OptimizeForce, {}}));
    add(sweep(ModelKind::Locking, fig2_locking_displacement(),
              {LambdaMode::OptimizeDisplacement, {}}));
    add(sweep(ModelKind::Locking, fig2_locking_displacement(), {LambdaMode::Fixed, {0.5, 0.0}}));
    return Outcome{errors == 0 && worst >= -1e-9,
                   fmt("points=%.0f min(S_q|kappa|^2-UQL)=%.3e", points, worst)};
  });

  run("AC8", "uncertainty check on vacuum and boundary triples", 1.0, [] {
    DetectorNoiseModel vac;
    vac.s_yy = vac.s_zz = vac.s_ff = 0.5;
    const double det = uncertainty_matrix(vac, 1).determinant().real();
    DetectorNoiseModel edge = vac;
    edge.s_ff = 1.0;
    const double lmin = std::min(min_eigenvalue(uncertainty_matrix(edge, 1)),
                                 min_eigenvalue(uncertainty_matrix(edge, -1)));
    const bool ok = !is_physical(vac) && std::abs(det + 0.125) < 1e-15 && is_physical(edge) &&
                    std::abs(lmin) < 1e-12;
    return Outcome{ok, fmt("vacuum det=%.6f boundary lambda_min=%.3e", det, lmin)};
  });

  run("AC9", "fixed seeds reproduce output byte for byte", 120.0, [] {
    using namespace qlimit::cli;
    const auto sweep_text = [](bool parallel) {
      RunConfig c = parse_config(nlohmann::json{{"model", "locking"},
                                                {"coupling", 1},
                                                {"control_coupling", 2},
                                                {"lambda_policy", "optimize-displacement"},
                                                {"grid_count", 100}});
      c.parallel = parallel;
      std::ostringstream out, err;
      cmd_sweep(c, out, err);
      return out.str();
    };
    const auto bounds_text = [](bool parallel) {
      RunConfig c;
      c.seed = 42;
      c.parallel = parallel;
      std::ostringstream out, err;
      cmd_bounds(c, std::nullopt, out, err);
      return out.str();
    };
    const std::string s = sweep_text(true), b = bounds_text(true);
    const bool ok = !s.empty() && !b.empty() && s == sweep_text(true) && s == sweep_text(false) &&
                    b == bounds_text(true) && b == bounds_text(false);
    return Outcome{ok, fmt("sweep=%.0f bytes bounds=%.0f bytes", s.size(), b.size())};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
