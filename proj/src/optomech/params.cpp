#include "qlimit/optomech/params.hpp"

#include <cmath>
#include <numbers>

#include "qlimit/error.hpp"

namespace qlimit::optomech {

void OptomechParams::validate() const {
  for (double v : {mech_frequency, mech_damping, cavity_decay, detuning, coupling,
                   control_coupling, readout_phase, feedback_phase, n_thermal}) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, "optomechanical parameters must be finite");
    }
  }
  if (!(mech_frequency > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "Omega must be positive");
  }
  if (!(cavity_decay > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "cavity decay gamma must be positive");
  }
  if (mech_damping < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "Gamma must be non-negative");
  }
  if (n_thermal < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "n_th must be non-negative");
  }
}

OptomechParams fig2_detuned() {
  OptomechParams p;
  p.cavity_decay = 2.0;
  p.coupling = 5.0;
  p.detuning = -5.0;
  p.readout_phase = -std::numbers::pi / 4.0;
  return p;
}

OptomechParams fig2_locking_force() {
  OptomechParams p;
  p.cavity_decay = 5.0;
  p.coupling = 1.0;
  p.control_coupling = 2.0;
  p.readout_phase = 0.0;
  p.feedback_phase = std::atan(2.0);
  return p;
}

OptomechParams fig2_locking_displacement() {
  OptomechParams p;
  p.cavity_decay = 2.0;
  p.coupling = 1.0;
  p.control_coupling = 2.0;
  p.readout_phase = 0.0;
  p.feedback_phase = 0.0;
  return p;
}

}  // namespace qlimit::optomech
