#pragma once

#include <optional>
#include <ostream>

#include "qlimit/cli/config.hpp"

namespace qlimit::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitUnstable = 3,
  kExitBoundViolation = 4,
};

/// CSV sweep of one model. Writes to config.output, or `out` when empty.
/// Returns kExitConfig if any grid point could not be evaluated and
/// kExitUnstable for an unstable constant-feedback model (rows still
/// written).
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Detuned and locking curves for panel 'a' (force, locking with tan theta = 2,
/// gamma = 5, lambda optimized for S_f) or 'b' (displacement, theta = 0,
/// gamma = 2, lambda optimized for S_q). Uses config's grid, output and svg.
int cmd_fig2(char panel, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Monte-Carlo certification of the bound chain. With `injected`, that
/// model is checked instead of sampled ones; an unphysical injected model
/// is rejected with kExitConfig.
int cmd_bounds(const RunConfig& config, const std::optional<DetectorNoiseModel>& injected,
               std::ostream& out, std::ostream& err);

/// Eigenvalues of the drift matrix and the stability verdict.
int cmd_stability(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qlimit::cli
