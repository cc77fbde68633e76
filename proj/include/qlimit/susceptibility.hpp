#pragma once

#include <utility>
#include <vector>

#include "qlimit/types.hpp"

namespace qlimit {

// Units: hbar = 1, every rate and frequency in one common arbitrary unit.

/// Damped-oscillator displacement susceptibility
///   chi_qq(w) = Omega / ((Gamma/2 - i w)^2 + Omega^2).
/// Throws Error{Pole} when Gamma == 0 and |w| == Omega.
Complex mech_susceptibility(double omega_m, double gamma_m, double omega);

/// |Im(1/chi_qq)| = |w| Gamma / Omega. Defined for every w.
double uql_force(double omega_m, double gamma_m, double omega);

/// |Im chi_qq(w)|.
double uql_displacement(double omega_m, double gamma_m, double omega);

/// |1/chi_qq(w)|: uncorrelated shot/backaction balance with S_FF S_ZZ = 1/4.
double sql_force(double omega_m, double gamma_m, double omega);

/// |chi_qq(w)|.
double sql_displacement(double omega_m, double gamma_m, double omega);

/// Frequency response chi(w), either the closed-form oscillator or a table.
///
/// Tables are linearly interpolated on the non-negative half-axis; negative
/// frequencies evaluate to conj(chi(-w)). Negative-frequency rows in the
/// input are accepted only if they match the conjugate of their positive
/// partner.
class Susceptibility {
 public:
  static Susceptibility closed_form(double omega_m, double gamma_m);
  static Susceptibility tabulated(std::vector<std::pair<double, Complex>> samples);

  Complex operator()(double omega) const;

  bool is_closed_form() const noexcept { return table_.empty(); }
  double omega_m() const noexcept { return omega_m_; }
  double gamma_m() const noexcept { return gamma_m_; }

 private:
  Susceptibility() = default;

  double omega_m_ = 0.0;
  double gamma_m_ = 0.0;
  std::vector<std::pair<double, Complex>> table_;  // w >= 0, strictly increasing
};

}  // namespace qlimit
