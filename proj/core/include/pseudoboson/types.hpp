#pragma once

#include <complex>

#include <Eigen/Dense>

namespace pseudoboson {

using cplx = std::complex<double>;

/// Complex samples of a function on the nodes of a quadrature grid.
using GridFunction = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace pseudoboson
