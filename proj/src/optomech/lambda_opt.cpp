#include "qlimit/optomech/lambda_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qlimit/error.hpp"

namespace qlimit::optomech {
namespace {

double pick(const SensitivityPoint& s, Objective objective) {
  return objective == Objective::Force ? s.force : s.displacement;
}

}  // namespace

LambdaOptimum optimize_lambda(const OptomechParams& params, double omega, Objective objective,
                              const LambdaSearchConfig& config) {
  params.validate();
  if (config.angles < 1 || config.refine_starts < 1) {
    throw Error(ErrorKind::InvalidArgument, "bad lambda search grid");
  }

  int evaluations = 0;
  auto log_sensitivity = [&](Complex lambda) {
    ++evaluations;
    try {
      const double v = pick(sensitivity_at(build_locking_model(params, lambda), omega), objective);
      return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  struct Candidate {
    double value;
    Complex lambda;
  };
  std::vector<Candidate> grid{{log_sensitivity(Complex{}), Complex{}}};
  for (double r : config.radii) {
    for (int k = 0; k < config.angles; ++k) {
      const Complex l = std::polar(r, 2.0 * std::numbers::pi * k / config.angles);
      grid.push_back({log_sensitivity(l), l});
    }
  }
  // stable sort keeps ties in grid order, so the result is reproducible
  std::stable_sort(grid.begin(), grid.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  LambdaOptimum best;
  double best_log = grid.front().value;
  best.lambda = grid.front().lambda;
  const std::size_t starts = std::min<std::size_t>(config.refine_starts, grid.size());
  for (std::size_t s = 0; s < starts; ++s) {
    const Complex start = grid[s].lambda;
    const double scale = std::max(std::abs(start), 1e-2);
    NelderMeadOptions opts = config.refine;
    opts.initial_step *= scale;
    opts.x_tolerance *= std::max(scale, 1.0);
    const NelderMeadResult r = nelder_mead(
        [&](std::span<const double> x) { return log_sensitivity({x[0], x[1]}); },
        {start.real(), start.imag()}, opts);
    if (s == 0 || r.value < best_log) {
      best_log = r.value;
      best.lambda = {r.x[0], r.x[1]};
      best.converged = r.converged;
    }
  }
  if (!std::isfinite(best_log)) {
    throw Error(ErrorKind::ZeroSignalTransfer, "no feedback value yields a finite sensitivity");
  }
  best.point = sensitivity_at(build_locking_model(params, best.lambda), omega);
  best.value = pick(best.point, objective);
  best.evaluations = evaluations;
  return best;
}

}  // namespace qlimit::optomech
