#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "pseudoboson/errors.hpp"
#include "pseudoboson/fock.hpp"
#include "pseudoboson/matrix_exp.hpp"

namespace pb = pseudoboson;
using pb::cplx;

namespace {

Eigen::MatrixXcd random_matrix(int n, double scale, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(dist(rng), dist(rng)) * scale;
  return m;
}

}  // namespace

TEST(Expm, MatchesEigenMatrixExponential) {
  unsigned seed = 7;
  for (int n : {1, 3, 8, 20}) {
    for (double scale : {1e-3, 0.3, 1.0, 4.0}) {
      const Eigen::MatrixXcd m = random_matrix(n, scale, seed++);
      const Eigen::MatrixXcd ours = pb::expm(m);
      const Eigen::MatrixXcd ref = m.exp();
      EXPECT_LE((ours - ref).norm() / ref.norm(), 1e-12) << "n=" << n << " scale=" << scale;
    }
  }
}

TEST(Expm, ClosedForms) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d.diagonal() << cplx(1.0, 0.0), cplx(0.0, pb::kPi), cplx(-2.0, 0.5);
  const auto e = pb::expm(d);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(e(i, i) - std::exp(d(i, i))), 0.0, 1e-14);

  Eigen::MatrixXcd nil = Eigen::MatrixXcd::Zero(2, 2);
  nil(0, 1) = 5.0;
  const auto en = pb::expm(nil);
  EXPECT_NEAR(std::abs(en(0, 1) - 5.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(en(0, 0) - 1.0), 0.0, 1e-14);

  EXPECT_THROW(pb::expm(Eigen::MatrixXcd::Zero(2, 3)), pb::ContractViolation);
}

TEST(Expm, MultiplyAgreesWithDense) {
  const Eigen::MatrixXcd m = random_matrix(12, 1.5, 99);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(12);
  v[0] = 1.0;
  v[5] = cplx(0.0, -2.0);
  const Eigen::SparseMatrix<cplx> sm = m.sparseView();
  const Eigen::VectorXcd ref = m.exp() * v;
  EXPECT_LE((pb::expm_multiply(sm, v) - ref).norm() / ref.norm(), 1e-12);
}

TEST(Expm, DisplacementOfTheVacuum) {
  // exp(alpha a^dag - conj(alpha) a) e_0 is the coherent vector.
  const int dim = 64;
  const auto l = pb::fock_ladders(dim);
  const cplx alpha(1.2, -0.5);
  const Eigen::MatrixXcd gen = alpha * l.a_dag - std::conj(alpha) * l.a;
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(dim);
  e0[0] = 1.0;
  const Eigen::VectorXcd dense = pb::expm(gen) * e0;
  const Eigen::VectorXcd sparse = pb::expm_multiply(gen.sparseView(), e0);
  const Eigen::VectorXcd exact = pb::coherent_vector(alpha, dim);
  EXPECT_LE((dense - exact).head(dim / 2).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((sparse - exact).head(dim / 2).cwiseAbs().maxCoeff(), 1e-12);
}
