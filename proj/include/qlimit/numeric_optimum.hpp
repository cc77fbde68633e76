#pragma once

#include <vector>

#include "qlimit/added_noise.hpp"
#include "qlimit/nelder_mead.hpp"

namespace qlimit {

struct NumericOptimumConfig {
  double g_min = 1e-3;
  double g_max = 1e3;
  int g_points = 25;
  std::vector<double> lambda_radii{0.1, 0.3, 1.0, 3.0, 10.0};
  int lambda_angles = 8;
  int refine_starts = 4;
  bool lambda_fixed_zero = false;
  NelderMeadOptions refine{0.25, 1e-11, 1e-15, 6000};
  AddedNoiseOptions noise{};
};

struct NumericOptimum {
  double value = 0.0;
  double g = 0.0;
  Complex lambda{};
  bool converged = false;
  int evaluations = 0;
};

/// Brute-force minimum of added_noise_spectrum over g > 0 and complex
/// lambda: log-grid over g times a polar grid over lambda, then simplex
/// refinement in (log g, Re lambda, Im lambda) from the best grid points.
/// Requires a physical model. Non-convergence is reported through
/// `converged` with the best value found.
NumericOptimum numeric_optimum(const DetectorNoiseModel& noise, Complex chi_qq,
                               const NumericOptimumConfig& config = {});

}  // namespace qlimit
