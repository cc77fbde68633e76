#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qlimit {

struct NelderMeadOptions {
  double initial_step = 0.1;
  double x_tolerance = 1e-10;
  double f_tolerance = 1e-13;
  int max_evaluations = 4000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization (standard reflection, expansion,
/// contraction, shrink coefficients 1, 2, 1/2, 1/2). Non-finite objective
/// values are treated as +inf. Converges when both the simplex diameter and
/// the spread of values fall under their tolerances.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace qlimit
