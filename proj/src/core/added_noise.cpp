#include "qlimit/added_noise.hpp"

#include <algorithm>
#include <cmath>

#include "qlimit/error.hpp"

namespace qlimit {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void DetectorNoiseModel::validate() const {
  if (!(s_yy >= 0.0) || !(s_zz >= 0.0) || !(s_ff >= 0.0) || !std::isfinite(s_yy) ||
      !std::isfinite(s_zz) || !std::isfinite(s_ff)) {
    throw Error(ErrorKind::InvalidArgument, "auto-spectra must be finite and non-negative");
  }
  if (!finite(s_yf) || !finite(s_zf) || !finite(s_yz) || !finite(chi_ff)) {
    throw Error(ErrorKind::InvalidArgument, "cross-spectra and chi_FF must be finite");
  }
}

void LoopGains::validate() const {
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw Error(ErrorKind::InvalidArgument, "coupling g must be positive and finite");
  }
  if (!finite(lambda)) {
    throw Error(ErrorKind::InvalidArgument, "feedback lambda must be finite");
  }
}

Complex loop_factor(const LoopGains& gains, Complex chi_qq, Complex chi_ff) {
  return 1.0 - gains.g * gains.lambda - gains.g * gains.g * chi_qq * chi_ff;
}

double added_noise_spectrum(const LoopGains& gains, const DetectorNoiseModel& noise,
                            Complex chi_qq, AddedNoiseOptions options) {
  gains.validate();
  noise.validate();
  // q_hat_f = a F0 + b Y0 + c Z0
  const Complex a = gains.g * chi_qq;
  const Complex b = gains.lambda;
  const Complex c = loop_factor(gains, chi_qq, noise.chi_ff) / gains.g;

  double s = std::norm(a) * noise.s_ff + std::norm(b) * noise.s_yy + std::norm(c) * noise.s_zz;
  s += 2.0 * (a * std::conj(b) * std::conj(noise.s_yf)).real();
  s += 2.0 * (a * std::conj(c) * std::conj(noise.s_zf)).real();
  if (options.include_yz) {
    s += 2.0 * (b * std::conj(c) * noise.s_yz).real();
  }
  return s;
}

double force_sensitivity(double added, Complex chi_qq) {
  const double n = std::norm(chi_qq);
  if (n == 0.0) {
    throw Error(ErrorKind::ZeroDenominator, "chi_qq == 0");
  }
  return added / n;
}

double displacement_sensitivity(double added, const LoopGains& gains, Complex chi_qq,
                                Complex chi_ff) {
  const Complex kappa = loop_factor(gains, chi_qq, chi_ff);
  const double scale = std::max({1.0, std::abs(gains.g * gains.lambda),
                                 std::abs(gains.g * gains.g * chi_qq * chi_ff)});
  if (std::abs(kappa) <= 1e-14 * scale) {
    throw Error(ErrorKind::ClosedLoopSingularity, "1 - g lambda - g^2 chi_qq chi_FF == 0");
  }
  return added / std::norm(kappa);
}

BoundCoefficients bound_coefficients(const DetectorNoiseModel& n) {
  const double syy = n.s_yy;
  const double szz = n.s_zz;
  const double yr = n.s_yf.real(), yi = n.s_yf.imag();
  const double zr = n.s_zf.real(), zi = n.s_zf.imag();
  const double cr = n.chi_ff.real(), ci = n.chi_ff.imag();

  BoundCoefficients k;
  k.a = zr * syy + yr * szz - cr * syy * szz;
  k.b = zi * syy + yi * szz + ci * syy * szz;
  k.c = (n.s_ff * (syy + szz) + std::norm(n.chi_ff) * syy * szz - (yi - zi) * (yi - zi) -
         (yr - zr) * (yr - zr) + 2.0 * syy * (ci * zi - cr * zr) +
         2.0 * szz * (ci * yi - cr * yr)) *
        syy * szz;
  return k;
}

double analytic_optimum_bound(const DetectorNoiseModel& noise, Complex chi_qq) {
  noise.validate();
  const double sum = noise.s_yy + noise.s_zz;
  if (sum == 0.0) {
    throw Error(ErrorKind::ZeroDenominator, "S_YY + S_ZZ == 0");
  }
  const BoundCoefficients k = bound_coefficients(noise);
  if (k.c < 0.0) {
    throw Error(ErrorKind::NegativeDiscriminant, "C < 0: model violates positivity");
  }
  return 2.0 * (k.a * chi_qq.real() + k.b * chi_qq.imag() + std::abs(chi_qq) * std::sqrt(k.c)) /
         sum;
}

double inequality_chain_margin(const DetectorNoiseModel& noise) {
  const BoundCoefficients k = bound_coefficients(noise);
  const double half = 0.5 * (noise.s_yy + noise.s_zz);
  const double t = std::abs(k.b) + half;
  return k.c - (k.a * k.a + t * t);
}

}  // namespace qlimit
