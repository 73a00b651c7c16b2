#include "pseudoboson/matrix_exp.hpp"

#include <algorithm>
#include <cmath>

#include "pseudoboson/errors.hpp"

namespace pseudoboson {

namespace {

double norm1(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

double norm1(const Eigen::SparseMatrix<cplx>& m) {
  double best = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    double col = 0.0;
    for (Eigen::SparseMatrix<cplx>::InnerIterator it(m, k); it; ++it) col += std::abs(it.value());
    best = std::max(best, col);
  }
  return best;
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ContractViolation("expm: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  if (!m.allFinite()) throw ContractViolation("expm: matrix has non-finite entries");

  // Scale so that ||m / 2^s||_1 <= 1/2, where 24 Taylor terms are far below
  // double precision.
  const double nrm = norm1(m);
  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const Eigen::MatrixXcd scaled = m / std::ldexp(1.0, squarings);

  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= 24; ++k) {
    term = (term * scaled / static_cast<double>(k)).eval();
    result += term;
    if (norm1(term) <= 1e-18 * norm1(result)) break;
  }
  for (int i = 0; i < squarings; ++i) result = (result * result).eval();
  return result;
}

Eigen::VectorXcd expm_multiply(const Eigen::SparseMatrix<cplx>& m, const Eigen::VectorXcd& v) {
  if (m.rows() != m.cols() || m.cols() != v.size())
    throw ContractViolation("expm_multiply: dimension mismatch");
  const double nrm = norm1(m);
  const int steps = std::max(1, static_cast<int>(std::ceil(nrm / 3.0)));
  const Eigen::SparseMatrix<cplx> scaled = m / static_cast<double>(steps);

  Eigen::VectorXcd out = v;
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd term = out;
    Eigen::VectorXcd acc = out;
    for (int k = 1; k <= 60; ++k) {
      term = (scaled * term) / static_cast<double>(k);
      acc += term;
      if (term.norm() <= 1e-17 * acc.norm()) break;
    }
    out = std::move(acc);
  }
  return out;
}

}  // namespace pseudoboson
