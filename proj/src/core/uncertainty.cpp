#include "qlimit/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "qlimit/error.hpp"

namespace qlimit {

Matrix3c uncertainty_matrix(const DetectorNoiseModel& n, int sign, bool include_yz) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  }
  const double s = sign;
  const Complex half_i{0.0, 0.5 * s};

  Matrix3c m;
  m(0, 0) = n.s_yy;
  m(1, 1) = n.s_zz;
  m(2, 2) = n.s_ff - s * n.chi_ff.imag();
  m(0, 1) = include_yz ? n.s_yz : Complex{};
  m(0, 2) = n.s_yf + half_i;
  m(1, 2) = n.s_zf + half_i;
  m(1, 0) = std::conj(m(0, 1));
  m(2, 0) = std::conj(m(0, 2));
  m(2, 1) = std::conj(m(1, 2));
  return m;
}

double min_eigenvalue(const Matrix3c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix3c> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double psd_tolerance(const Matrix3c& m) { return -1e-12 * std::abs(m.trace().real()); }

bool is_physical(const DetectorNoiseModel& noise, bool include_yz) {
  for (int sign : {1, -1}) {
    const Matrix3c m = uncertainty_matrix(noise, sign, include_yz);
    if (min_eigenvalue(m) < psd_tolerance(m)) {
      return false;
    }
  }
  return true;
}

double minimal_s_ff(const DetectorNoiseModel& n) {
  if (!(n.s_yy > 0.0) || !(n.s_zz > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "minimal S_FF needs S_YY, S_ZZ > 0");
  }
  // Schur complement of the (Y, Z) block, expanded and divided by S_YY S_ZZ.
  const double yz = n.s_yy * n.s_zz;
  const double base = (n.s_yy + n.s_zz) / 4.0 + std::norm(n.s_zf) * n.s_yy +
                      std::norm(n.s_yf) * n.s_zz;
  const double odd = n.s_zf.imag() * n.s_yy + n.s_yf.imag() * n.s_zz + n.chi_ff.imag() * yz;
  return (base + std::abs(odd)) / yz;
}

}  // namespace qlimit
