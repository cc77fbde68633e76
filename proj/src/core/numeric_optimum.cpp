#include "qlimit/numeric_optimum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlimit/error.hpp"
#include "qlimit/uncertainty.hpp"

namespace qlimit {
namespace {

struct Candidate {
  double value;
  std::vector<double> x;  // (log g) or (log g, Re lambda, Im lambda)
};

}  // namespace

NumericOptimum numeric_optimum(const DetectorNoiseModel& noise, Complex chi_qq,
                               const NumericOptimumConfig& config) {
  noise.validate();
  if (!is_physical(noise, config.noise.include_yz)) {
    throw Error(ErrorKind::InvalidArgument, "numeric optimum requires a physical noise model");
  }
  if (!(config.g_min > 0.0) || !(config.g_max > config.g_min) || config.g_points < 2 ||
      config.lambda_angles < 1 || config.refine_starts < 1) {
    throw Error(ErrorKind::InvalidArgument, "bad numeric optimum grid");
  }

  const bool fixed = config.lambda_fixed_zero;
  int evaluations = 0;
  auto objective = [&](std::span<const double> x) {
    ++evaluations;
    LoopGains gains{std::exp(x[0]), fixed ? Complex{} : Complex{x[1], x[2]}};
    return added_noise_spectrum(gains, noise, chi_qq, config.noise);
  };

  std::vector<Complex> lambdas{Complex{}};
  if (!fixed) {
    for (double r : config.lambda_radii) {
      for (int k = 0; k < config.lambda_angles; ++k) {
        lambdas.push_back(std::polar(r, 2.0 * std::numbers::pi * k / config.lambda_angles));
      }
    }
  }

  const double lo = std::log(config.g_min);
  const double hi = std::log(config.g_max);
  std::vector<Candidate> grid;
  grid.reserve(static_cast<std::size_t>(config.g_points) * lambdas.size());
  for (int i = 0; i < config.g_points; ++i) {
    const double lg = lo + (hi - lo) * i / (config.g_points - 1);
    for (Complex l : lambdas) {
      std::vector<double> x = fixed ? std::vector<double>{lg}
                                    : std::vector<double>{lg, l.real(), l.imag()};
      const double v = objective(x);
      grid.push_back({v, std::move(x)});
    }
  }
  const std::size_t starts = std::min<std::size_t>(config.refine_starts, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(),
                    [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  NumericOptimum best;
  best.value = grid.front().value;
  std::vector<double> best_x = grid.front().x;
  for (std::size_t s = 0; s < starts; ++s) {
    NelderMeadResult r = nelder_mead(objective, grid[s].x, config.refine);
    if (s == 0 || r.value < best.value) {
      best.value = r.value;
      best.converged = r.converged;
      best_x = std::move(r.x);
    }
  }
  best.g = std::exp(best_x[0]);
  best.lambda = fixed ? Complex{} : Complex{best_x[1], best_x[2]};
  best.evaluations = evaluations;
  return best;
}

}  // namespace qlimit
