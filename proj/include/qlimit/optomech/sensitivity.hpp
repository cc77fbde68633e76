#pragma once

#include "qlimit/optomech/state_space.hpp"

namespace qlimit::optomech {

struct SensitivityPoint {
  double force = 0.0;         // S_f = S_Z / |T_f|^2
  double displacement = 0.0;  // S_q = S_f |T_{f->q}|^2
  Complex signal_transfer{};
  Complex force_to_q{};
  Complex loop_factor{};      // chi_qq / T_{f->q}
};

/// Output noise referred to the force input, and to displacement via the
/// closed-loop force-to-q transfer. Throws Error{ZeroSignalTransfer} when the
/// force does not reach the readout (|T_f| is zero to rounding).
SensitivityPoint sensitivity_at(const StateSpaceModel& model, double omega);

}  // namespace qlimit::optomech
