#include "qlimit/optomech/sweep.hpp"

#include <cmath>
#include <exception>
#include <optional>

#include <omp.h>

#include "qlimit/error.hpp"
#include "qlimit/susceptibility.hpp"

namespace qlimit::optomech {
namespace {

// Frequency-independent part of a sweep, shared read-only by all workers.
struct SweepPlan {
  const SweepRequest* request = nullptr;
  std::optional<StateSpaceModel> model;  // absent when lambda is optimized per point
  Stability stability = Stability::NotApplicable;
  CVector eigenvalues;
};

SweepPlan plan(const SweepRequest& req) {
  req.params.validate();
  if (req.omegas.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty frequency grid");
  }
  for (std::size_t i = 1; i < req.omegas.size(); ++i) {
    if (!(req.omegas[i] > req.omegas[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "frequency grid must be strictly increasing");
    }
  }
  const LambdaMode mode = req.lambda.mode;
  if (req.model == ModelKind::Detuned && mode != LambdaMode::Off) {
    throw Error(ErrorKind::InvalidArgument, "the detuned model has no feedback loop");
  }

  SweepPlan p;
  p.request = &req;
  if (mode == LambdaMode::OptimizeForce || mode == LambdaMode::OptimizeDisplacement) {
    return p;
  }
  const Complex lambda = mode == LambdaMode::Fixed ? req.lambda.fixed : Complex{};
  p.model = req.model == ModelKind::Detuned ? build_detuned_model(req.params)
                                            : build_locking_model(req.params, lambda);
  if (lambda.imag() == 0.0) {
    const RMatrix a = p.model->drift.real();
    p.eigenvalues = drift_eigenvalues(a);
    p.stability = stability(a) ? Stability::Stable : Stability::Unstable;
  }
  return p;
}

CurvePoint evaluate(const SweepPlan& plan, double omega) {
  const SweepRequest& req = *plan.request;
  const OptomechParams& prm = req.params;
  CurvePoint pt;
  pt.omega = omega;
  try {
    pt.uql_f = uql_force(prm.mech_frequency, prm.mech_damping, omega);
    pt.uql_q = uql_displacement(prm.mech_frequency, prm.mech_damping, omega);
    pt.sql_f = sql_force(prm.mech_frequency, prm.mech_damping, omega);
    pt.sql_q = sql_displacement(prm.mech_frequency, prm.mech_damping, omega);

    SensitivityPoint s;
    if (plan.model) {
      s = sensitivity_at(*plan.model, omega);
      pt.lambda = plan.model->lambda;
    } else {
      const Objective obj = req.lambda.mode == LambdaMode::OptimizeForce ? Objective::Force
                                                                         : Objective::Displacement;
      const LambdaOptimum best = optimize_lambda(prm, omega, obj, req.search);
      s = best.point;
      pt.lambda = best.lambda;
    }
    pt.s_f = s.force;
    pt.s_q = s.displacement;
    pt.loop_factor = s.loop_factor;
    for (double v : {pt.s_f, pt.s_q, pt.sql_f, pt.sql_q}) {
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::InvalidArgument, "non-finite spectrum");
      }
    }
  } catch (const Error& e) {
    pt.error = to_string(e.kind());
  } catch (const std::exception& e) {
    pt.error = e.what();
  }
  return pt;
}

SensitivityCurve start_curve(const SweepPlan& p) {
  SensitivityCurve curve;
  curve.stability = p.stability;
  curve.eigenvalues = p.eigenvalues;
  curve.points.resize(p.request->omegas.size());
  return curve;
}

}  // namespace

const char* to_string(Stability s) noexcept {
  switch (s) {
    case Stability::Stable: return "true";
    case Stability::Unstable: return "false";
    case Stability::NotApplicable: return "n/a";
  }
  return "n/a";
}

std::vector<double> FrequencyGrid::points() const {
  if (count < 2 || !(min < max) || !std::isfinite(min) || !std::isfinite(max)) {
    throw Error(ErrorKind::InvalidArgument, "grid needs min < max and count >= 2");
  }
  if (logarithmic && !(min > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "logarithmic grid needs min > 0");
  }
  std::vector<double> w(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / last;
    w[i] = logarithmic ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                       : min + t * (max - min);
  }
  w.front() = min;
  w.back() = max;
  return w;
}

SensitivityCurve sweep_serial(const SweepRequest& request) {
  const SweepPlan p = plan(request);
  SensitivityCurve curve = start_curve(p);
  for (std::size_t i = 0; i < request.omegas.size(); ++i) {
    curve.points[i] = evaluate(p, request.omegas[i]);
  }
  return curve;
}

SensitivityCurve sweep_parallel(const SweepRequest& request) {
  const SweepPlan p = plan(request);
  SensitivityCurve curve = start_curve(p);
  const auto n = static_cast<std::ptrdiff_t>(request.omegas.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    curve.points[k] = evaluate(p, request.omegas[k]);
  }
  return curve;
}

}  // namespace qlimit::optomech
