#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qlimit {

using Complex = std::complex<double>;

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using RMatrix = Eigen::MatrixXd;

}  // namespace qlimit
