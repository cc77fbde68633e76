#pragma once

#include <vector>

#include "qlimit/nelder_mead.hpp"
#include "qlimit/optomech/sensitivity.hpp"

namespace qlimit::optomech {

enum class Objective { Force, Displacement };

struct LambdaSearchConfig {
  // |lambda| ring radii for the coarse polar grid; lambda = 0 is always tried.
  std::vector<double> radii{1e-3, 3e-3, 1e-2, 3e-2, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0,
                            300.0, 1000.0};
  int angles = 12;
  int refine_starts = 3;
  NelderMeadOptions refine{0.1, 1e-10, 1e-13, 3000};
};

struct LambdaOptimum {
  Complex lambda{};
  double value = 0.0;  // the minimized sensitivity
  SensitivityPoint point;
  bool converged = false;
  int evaluations = 0;
};

/// Minimizes the chosen sensitivity of the locking model over complex
/// lambda at one frequency. The simplex works on log S in (Re, Im lambda)
/// with a step scaled to the starting |lambda|. Deterministic.
LambdaOptimum optimize_lambda(const OptomechParams& params, double omega, Objective objective,
                              const LambdaSearchConfig& config = {});

}  // namespace qlimit::optomech
