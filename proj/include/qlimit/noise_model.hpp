#pragma once

#include "qlimit/types.hpp"

namespace qlimit {

/// Symmetrized second moments of the detector at one frequency.
///
/// Only one triangle is stored: S_FY = conj(S_YF), S_FZ = conj(S_ZF),
/// S_ZY = conj(S_YZ). `s_yz` is carried for the optional Y/Z correlation
/// term and is ignored unless a caller opts in.
struct DetectorNoiseModel {
  double s_yy = 0.0;
  double s_zz = 0.0;
  double s_ff = 0.0;
  Complex s_yf{};
  Complex s_zf{};
  Complex s_yz{};
  Complex chi_ff{};  // backaction susceptibility

  /// Throws Error{InvalidArgument} on negative or non-finite entries.
  void validate() const;
};

/// Coupling strength g and feedback transfer value lambda at one frequency.
struct LoopGains {
  double g = 1.0;
  Complex lambda{};

  void validate() const;
};

}  // namespace qlimit
