#pragma once

#include "qlimit/noise_model.hpp"
#include "qlimit/types.hpp"

namespace qlimit {

struct AddedNoiseOptions {
  /// Include the 2 Re[lambda conj(kappa/g) S_YZ] term. Off by default since
  /// the uncertainty matrix treats the Y/Z correlation as zero.
  bool include_yz = false;
};

/// kappa = 1 - g lambda - g^2 chi_qq chi_FF.
Complex loop_factor(const LoopGains& gains, Complex chi_qq, Complex chi_ff);

/// Spectrum of the force-referred added noise
///   q_hat_f = g chi_qq F0 + lambda Y0 + (kappa / g) Z0,
/// intrinsic mechanical noise excluded. With lambda = 0 this is the
/// open-loop shot + backaction spectrum.
double added_noise_spectrum(const LoopGains& gains, const DetectorNoiseModel& noise,
                            Complex chi_qq, AddedNoiseOptions options = {});

/// S_f = added / |chi_qq|^2.
double force_sensitivity(double added, Complex chi_qq);

/// S_q = added / |kappa|^2. Throws Error{ClosedLoopSingularity} at kappa == 0.
double displacement_sensitivity(double added, const LoopGains& gains, Complex chi_qq,
                                Complex chi_ff);

/// A, B, C of the optimum over (g, lambda).
struct BoundCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

BoundCoefficients bound_coefficients(const DetectorNoiseModel& noise);

/// Minimum of added_noise_spectrum over g > 0 and complex lambda:
///   2 (A Re chi + B Im chi + |chi| sqrt(C)) / (S_YY + S_ZZ).
/// Throws Error{ZeroDenominator} when S_YY = S_ZZ = 0 and
/// Error{NegativeDiscriminant} when C < 0.
double analytic_optimum_bound(const DetectorNoiseModel& noise, Complex chi_qq);

/// C - (A^2 + (|B| + (S_YY + S_ZZ)/2)^2). Non-negative for physical models.
double inequality_chain_margin(const DetectorNoiseModel& noise);

}  // namespace qlimit
