#include "qlimit/susceptibility.hpp"

#include <algorithm>
#include <cmath>

#include "qlimit/error.hpp"

namespace qlimit {
namespace {

void check_oscillator(double omega_m, double gamma_m) {
  if (!(omega_m > 0.0) || !std::isfinite(omega_m)) {
    throw Error(ErrorKind::InvalidArgument, "mechanical frequency must be positive");
  }
  if (!(gamma_m >= 0.0) || !std::isfinite(gamma_m)) {
    throw Error(ErrorKind::InvalidArgument, "mechanical damping must be non-negative");
  }
}

Complex oscillator_denominator(double omega_m, double gamma_m, double omega) {
  const Complex s{gamma_m / 2.0, -omega};
  return s * s + omega_m * omega_m;
}

}  // namespace

Complex mech_susceptibility(double omega_m, double gamma_m, double omega) {
  check_oscillator(omega_m, gamma_m);
  const Complex d = oscillator_denominator(omega_m, gamma_m, omega);
  if (d == Complex{}) {
    throw Error(ErrorKind::Pole, "undamped resonance at |w| = Omega; use Gamma > 0");
  }
  return omega_m / d;
}

double uql_force(double omega_m, double gamma_m, double omega) {
  check_oscillator(omega_m, gamma_m);
  return std::abs(omega) * gamma_m / omega_m;
}

double uql_displacement(double omega_m, double gamma_m, double omega) {
  return std::abs(mech_susceptibility(omega_m, gamma_m, omega).imag());
}

double sql_force(double omega_m, double gamma_m, double omega) {
  return 1.0 / std::abs(mech_susceptibility(omega_m, gamma_m, omega));
}

double sql_displacement(double omega_m, double gamma_m, double omega) {
  return std::abs(mech_susceptibility(omega_m, gamma_m, omega));
}

Susceptibility Susceptibility::closed_form(double omega_m, double gamma_m) {
  check_oscillator(omega_m, gamma_m);
  Susceptibility s;
  s.omega_m_ = omega_m;
  s.gamma_m_ = gamma_m;
  return s;
}

Susceptibility Susceptibility::tabulated(std::vector<std::pair<double, Complex>> samples) {
  std::vector<std::pair<double, Complex>> positive;
  std::vector<std::pair<double, Complex>> negative;
  for (const auto& [w, v] : samples) {
    if (!std::isfinite(w) || !std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::InvalidArgument, "non-finite susceptibility sample");
    }
    (w < 0.0 ? negative : positive).emplace_back(w, v);
  }
  if (positive.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "table needs at least two non-negative frequencies");
  }
  std::sort(positive.begin(), positive.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < positive.size(); ++i) {
    if (!(positive[i].first > positive[i - 1].first)) {
      throw Error(ErrorKind::InvalidArgument, "duplicate frequency in table");
    }
  }
  for (const auto& [w, v] : negative) {
    auto it = std::find_if(positive.begin(), positive.end(),
                           [&](const auto& p) { return p.first == -w; });
    if (it == positive.end()) {
      throw Error(ErrorKind::InvalidArgument, "negative frequency without positive partner");
    }
    const double tol = 1e-12 * std::max(1.0, std::abs(it->second));
    if (std::abs(v - std::conj(it->second)) > tol) {
      throw Error(ErrorKind::InvalidArgument, "table violates chi(-w) = conj(chi(w))");
    }
  }
  Susceptibility s;
  s.table_ = std::move(positive);
  return s;
}

Complex Susceptibility::operator()(double omega) const {
  if (is_closed_form()) {
    return mech_susceptibility(omega_m_, gamma_m_, omega);
  }
  const double w = std::abs(omega);
  if (w < table_.front().first || w > table_.back().first) {
    throw Error(ErrorKind::InvalidArgument, "frequency outside tabulated range");
  }
  auto hi = std::lower_bound(table_.begin(), table_.end(), w,
                             [](const auto& p, double x) { return p.first < x; });
  Complex v;
  if (hi->first == w) {
    v = hi->second;
  } else {
    const auto lo = hi - 1;
    const double t = (w - lo->first) / (hi->first - lo->first);
    v = lo->second + t * (hi->second - lo->second);
  }
  return omega < 0.0 ? std::conj(v) : v;
}

}  // namespace qlimit
