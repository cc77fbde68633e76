#pragma once

namespace qlimit::optomech {

/// Linearized optomechanical detector parameters, all in one common unit
/// (hbar = 1). Couplings are the effective, drive-enhanced values.
struct OptomechParams {
  double mech_frequency = 0.1;   // Omega
  double mech_damping = 0.1;     // Gamma
  double cavity_decay = 2.0;     // gamma, shared by main and control cavity
  double detuning = 0.0;         // Delta, detuned model only
  double coupling = 0.0;         // g
  double control_coupling = 0.0; // g~, locking model only
  double readout_phase = 0.0;    // phi: Z = b1_out sin phi + b2_out cos phi
  double feedback_phase = 0.0;   // theta: Y = c1_out sin theta + c2_out cos theta
  double n_thermal = 0.0;
  bool include_mech_noise = false;

  /// Throws Error{InvalidArgument} unless Omega, gamma > 0, Gamma, n_th >= 0
  /// and every field is finite.
  void validate() const;
};

/// Blue curves: gamma = 2, g = 5, Delta = -5, tan phi = -1.
OptomechParams fig2_detuned();
/// Red curve, force panel: g = 1, g~ = 2, gamma = 5, tan theta = 2, phi = 0.
OptomechParams fig2_locking_force();
/// Red curve, displacement panel: g = 1, g~ = 2, gamma = 2, theta = 0, phi = 0.
OptomechParams fig2_locking_displacement();

}  // namespace qlimit::optomech
