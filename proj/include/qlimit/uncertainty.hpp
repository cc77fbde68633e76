#pragma once

#include <Eigen/Dense>

#include "qlimit/noise_model.hpp"

namespace qlimit {

using Matrix3c = Eigen::Matrix3cd;

/// Hermitian matrix over (Y0, Z0, F0) whose positivity encodes the
/// uncertainty relation:
///
///   [ S_YY        0            S_YF + s i/2 ]
///   [ 0           S_ZZ         S_ZF + s i/2 ]
///   [ c.c.        c.c.         S_FF - s Im chi_FF ]
///
/// with s = +1 or -1. The (Y, Z) slot is zero unless `include_yz` is set.
Matrix3c uncertainty_matrix(const DetectorNoiseModel& noise, int sign, bool include_yz = false);

double min_eigenvalue(const Matrix3c& m);

/// Eigenvalue floor below which a matrix is not PSD: -1e-12 * |trace|.
double psd_tolerance(const Matrix3c& m);

/// True iff the uncertainty matrix is PSD for both signs.
bool is_physical(const DetectorNoiseModel& noise, bool include_yz = false);

/// Smallest S_FF for which the (Y, Z, F) matrix is PSD for both signs,
/// holding all other entries fixed. Requires S_YY, S_ZZ > 0.
double minimal_s_ff(const DetectorNoiseModel& noise);

}  // namespace qlimit
