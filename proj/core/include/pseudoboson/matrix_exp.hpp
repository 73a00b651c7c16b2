#pragma once

#include <Eigen/Sparse>

#include "pseudoboson/types.hpp"

namespace pseudoboson {

/// Dense matrix exponential by scaling and squaring of a truncated Taylor
/// series.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

/// exp(m) v without forming exp(m): the Taylor series of exp(m / s) is applied
/// s times, with s chosen from the 1-norm of m.
Eigen::VectorXcd expm_multiply(const Eigen::SparseMatrix<cplx>& m, const Eigen::VectorXcd& v);

}  // namespace pseudoboson
