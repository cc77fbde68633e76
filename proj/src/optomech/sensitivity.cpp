#include "qlimit/optomech/sensitivity.hpp"

#include "qlimit/error.hpp"
#include "qlimit/susceptibility.hpp"

namespace qlimit::optomech {

SensitivityPoint sensitivity_at(const StateSpaceModel& model, double omega) {
  const OutputTransfers t = output_transfers(model, omega);
  if (std::abs(t.signal) <= 1e-13 * t.signal_scale || t.signal == Complex{}) {
    throw Error(ErrorKind::ZeroSignalTransfer, "force does not reach the readout");
  }
  if (t.force_to_q == Complex{}) {
    throw Error(ErrorKind::ZeroSignalTransfer, "force does not reach the oscillator");
  }

  double s_z = 0.0;
  for (std::size_t k = 0; k < model.channels.size(); ++k) {
    s_z += std::norm(t.noise(static_cast<Eigen::Index>(k))) * model.channels[k].psd;
  }

  SensitivityPoint out;
  out.signal_transfer = t.signal;
  out.force_to_q = t.force_to_q;
  out.force = s_z / std::norm(t.signal);
  out.displacement = out.force * std::norm(t.force_to_q);
  const Complex chi = mech_susceptibility(model.params.mech_frequency,
                                          model.params.mech_damping, omega);
  out.loop_factor = chi / t.force_to_q;
  return out;
}

}  // namespace qlimit::optomech
