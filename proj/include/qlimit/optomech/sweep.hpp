#pragma once

#include <string>
#include <vector>

#include "qlimit/optomech/lambda_opt.hpp"

namespace qlimit::optomech {

struct FrequencyGrid {
  double min = 1e-2;
  double max = 1e1;
  std::size_t count = 400;
  bool logarithmic = true;

  /// Strictly increasing points; throws Error{InvalidArgument} on a bad spec.
  std::vector<double> points() const;
};

enum class LambdaMode { Off, Fixed, OptimizeForce, OptimizeDisplacement };

struct LambdaPolicy {
  LambdaMode mode = LambdaMode::Off;
  Complex fixed{};
};

enum class Stability { Stable, Unstable, NotApplicable };

const char* to_string(Stability s) noexcept;

struct CurvePoint {
  double omega = 0.0;
  double s_f = 0.0;
  double s_q = 0.0;
  double sql_f = 0.0;
  double uql_f = 0.0;
  double sql_q = 0.0;
  double uql_q = 0.0;
  Complex lambda{};
  Complex loop_factor{};
  std::string error;  // non-empty when the point could not be evaluated

  bool ok() const noexcept { return error.empty(); }
};

struct SensitivityCurve {
  std::vector<CurvePoint> points;
  Stability stability = Stability::NotApplicable;
  CVector eigenvalues;  // empty unless stability was decided
};

struct SweepRequest {
  ModelKind model = ModelKind::Detuned;
  OptomechParams params;
  std::vector<double> omegas;
  LambdaPolicy lambda;
  LambdaSearchConfig search;
};

/// Reference kernel: one frequency after another.
SensitivityCurve sweep_serial(const SweepRequest& request);

/// OpenMP kernel over frequency points. Each point depends only on its own
/// frequency, so output is identical to sweep_serial.
SensitivityCurve sweep_parallel(const SweepRequest& request);

}  // namespace qlimit::optomech
