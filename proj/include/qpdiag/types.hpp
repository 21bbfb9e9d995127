// Shared linear-algebra aliases.
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qpdiag {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

} // namespace qpdiag
