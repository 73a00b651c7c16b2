#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "pseudoboson/errors.hpp"
#include "pseudoboson/fock.hpp"
#include "pseudoboson/matrix_exp.hpp"

namespace pb = pseudoboson;
using pb::cplx;

namespace {

Eigen::VectorXcd unit(int dim, int k) {
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
  e[k] = 1.0;
  return e;
}

// ||phi_n(alpha, beta)||^2 = sum_k C(n, k) g^k / k! with g = |conj(alpha) - beta|^2,
// i.e. the Laguerre polynomial L_n(-g).
double laguerre_norm(int n, double g) {
  double sum = 0.0;
  double binom = 1.0;
  double gk = 1.0;
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      binom *= static_cast<double>(n - k + 1) / k;
      gk *= g;
      fact *= k;
    }
    sum += binom * gk / fact;
  }
  return sum;
}

}  // namespace

TEST(Ladders, SmallTruncation) {
  const auto l = pb::fock_ladders(3);
  EXPECT_LE((l.a * unit(3, 1) - unit(3, 0)).norm(), 1e-15);
  EXPECT_LE((l.a * unit(3, 2) - std::sqrt(2.0) * unit(3, 1)).norm(), 1e-15);
  EXPECT_THROW(pb::fock_ladders(1), pb::ContractViolation);
}

TEST(Ladders, CommutatorExceptLastLevel) {
  const int dim = 10;
  const auto l = pb::fock_ladders(dim);
  const Eigen::MatrixXcd c = l.a * l.a_dag - l.a_dag * l.a;
  for (int i = 0; i < dim - 1; ++i) EXPECT_NEAR(std::abs(c(i, i) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(c(dim - 1, dim - 1).real(), 1.0 - dim, 1e-13);
  EXPECT_LE(pb::commutator_block_residual(l.a, l.a_dag, dim - 1), 1e-14);
}

TEST(Ladders, NumberOperatorSpectrum) {
  const int dim = 16;
  const auto l = pb::fock_ladders(dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(l.a_dag * l.a);
  for (int k = 0; k < dim; ++k) EXPECT_NEAR(solver.eigenvalues()[k], k, 1e-12);
}

TEST(Displaced, UndeformedCase) {
  const auto s = pb::displaced_system(0.0, 0.0, 16);
  const auto l = pb::fock_ladders(16);
  EXPECT_LE((s.A - l.a).norm(), 0.0);
  EXPECT_LE((s.B - l.a_dag).norm(), 0.0);
  EXPECT_LE((s.phi0 - unit(16, 0)).norm(), 0.0);
  EXPECT_LE((s.psi0 - unit(16, 0)).norm(), 0.0);
}

TEST(Displaced, CollapseWhenBetaIsConjugateAlpha) {
  const cplx alpha(0.8, 0.0);
  const auto s = pb::displaced_system(alpha, std::conj(alpha), 64);
  EXPECT_LE((s.phi0 - s.psi0).norm(), 1e-15);
  EXPECT_LE((s.B - s.A.adjoint()).norm(), 1e-15);
  const auto fam = pb::displaced_vectors(s, 16);
  for (std::size_t n = 0; n < fam.phi.size(); ++n) {
    EXPECT_LE((fam.phi[n] - fam.psi[n]).norm(), 1e-12);
    for (std::size_t m = 0; m < fam.phi.size(); ++m)
      EXPECT_NEAR(std::abs(fam.phi[n].dot(fam.phi[m]) - (n == m ? 1.0 : 0.0)), 0.0, 1e-10);
  }
}

TEST(Displaced, VacuumIsAnnihilated) {
  const auto s = pb::displaced_system(1.0, 0.2, 64);
  EXPECT_LE((s.A * s.phi0).norm(), 1e-10);
  EXPECT_LE((s.B.adjoint() * s.psi0).norm(), 1e-10);
  EXPECT_LE(pb::commutator_block_residual(s.A, s.B, 62), 1e-12);
}

TEST(Displaced, DimensionGuard) {
  EXPECT_EQ(pb::minimum_dimension(1.0, 0.0), 26);
  EXPECT_THROW(pb::displaced_system(1.0, 0.0, 25), pb::TruncationError);
  EXPECT_NO_THROW(pb::displaced_system(1.0, 0.0, 26));
}

TEST(Displaced, VectorsMatchTheVPhiForm) {
  const auto s = pb::displaced_system(1.0, 0.0, 64);
  const auto fam = pb::displaced_vectors(s, 5);
  const Eigen::MatrixXcd v_phi = pb::v_phi_operator(s);
  EXPECT_LE((fam.phi[5] - v_phi * unit(64, 5)).norm(), 1e-12);
}

TEST(Displaced, GramFactor) {
  const auto s = pb::displaced_system(1.0, 0.0, 64);
  const auto g = pb::displaced_gram(s, 30);
  EXPECT_LE((g - std::exp(-0.5) * Eigen::MatrixXcd::Identity(31, 31)).cwiseAbs().maxCoeff(), 1e-8);

  const cplx alpha(0.5, 0.5);
  const cplx beta(0.3, 0.0);
  const auto s2 = pb::displaced_system(alpha, beta, 64);
  const auto g2 = pb::displaced_gram(s2, 20);
  const cplx factor = pb::displaced_gram_factor(alpha, beta);
  EXPECT_NEAR(std::abs(factor - std::exp(cplx(0.15, -0.15) - 0.5 * (0.5 + 0.09))), 0.0, 1e-15);
  EXPECT_LE((g2 - factor * Eigen::MatrixXcd::Identity(21, 21)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Displaced, NormGrowthAgainstLaguerre) {
  for (auto [alpha, beta] : {std::pair{cplx(1.0), cplx(0.0)}, std::pair{cplx(0.5, 0.5), cplx(0.3, 0.2)}}) {
    const auto s = pb::displaced_system(alpha, beta, 64);
    const double g = std::norm(std::conj(alpha) - beta);
    for (const auto& e : pb::norm_growth_check(s, 30)) {
      EXPECT_GE(e.norm_sq, e.lower_bound - 1e-8) << e.n;
      EXPECT_NEAR(e.norm_sq / laguerre_norm(e.n, g), 1.0, 1e-10) << e.n;
    }
  }
  const auto rows = pb::norm_growth_check(pb::displaced_system(1.0, 0.0, 64), 10);
  EXPECT_GE(rows.back().norm_sq, 11.0);
}

TEST(Displaced, LeakageIsDetected) {
  EXPECT_THROW(pb::displaced_vectors(pb::displaced_system(0.0, 1.2, 32), 16), pb::TruncationError);
  EXPECT_THROW(pb::displaced_vectors(pb::displaced_system(0.0, 0.0, 32), 17), pb::ContractViolation);
  EXPECT_LT(pb::displaced_vectors(pb::displaced_system(1.0, 0.0, 64), 30).leakage, pb::kMaxLeakage);
}

TEST(Displaced, VOperatorIdentity) {
  EXPECT_LE(pb::v_operator_identity(pb::displaced_system(0.6, 0.1, 64), 32), 1e-7);
  EXPECT_LE(pb::v_operator_identity(pb::displaced_system(0.0, 0.0, 16), 8), 1e-15);
  const auto s = pb::displaced_system(cplx(0.4, 0.3), cplx(0.4, -0.3), 64);
  const Eigen::MatrixXcd v = pb::v_phi_operator(s);
  const Eigen::MatrixXcd vv = (v.adjoint() * v).topLeftCorner(32, 32);
  EXPECT_LE((vv - Eigen::MatrixXcd::Identity(32, 32)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Displaced, BesselSums) {
  const auto fam = pb::displaced_vectors(pb::displaced_system(1.0, 0.0, 64), 30);
  const auto sums = pb::bessel_partial_sums(fam, unit(64, 30));
  for (std::size_t n = 1; n < sums.size(); ++n) EXPECT_GE(sums[n], sums[n - 1]);
  EXPECT_GT(sums.back(), 1.0);

  const auto ortho = pb::displaced_vectors(pb::displaced_system(0.7, 0.7, 64), 30);
  EXPECT_LE(pb::bessel_partial_sums(ortho, unit(64, 30)).back(), 1.0 + 1e-10);
}

TEST(PositionCoherent, NormalisationAndEigenvalue) {
  EXPECT_NEAR(std::abs(pb::position_coherent(0.0, 0.0, 0.0) - std::pow(pb::kPi, -0.25)), 0.0, 1e-15);
  const auto grid = pb::real_line_grid(12.0, 32);
  const cplx z(0.5, 0.3);
  const auto eta = grid.sample([&](double x) { return pb::position_coherent(0.0, z, x); });
  EXPECT_NEAR(pb::l2_norm(eta, grid), 1.0, 1e-12);
  // (x + d/dx) / sqrt(2) eta(x; 1) = eta(x; 1)
  const double h = 1e-5;
  for (double x : {-1.0, 0.3, 2.0}) {
    const auto f = [](double y) { return pb::position_coherent(0.0, 1.0, y); };
    const cplx a_eta = (x * f(x) + (f(x + h) - f(x - h)) / (2.0 * h)) / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(a_eta - f(x)), 0.0, 1e-6);
  }
}

TEST(MixedResolution, FailureFactor) {
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto disk = pb::disk_grid(6.0, 48, 128);
  const auto gauss = grid.sample([](double x) { return cplx(std::pow(pb::kPi, -0.25) * std::exp(-0.5 * x * x)); });
  const auto r = pb::mixed_resolution_scalar(pb::displaced_system(1.0, 0.0, 64), gauss, gauss, grid, disk);
  EXPECT_NEAR(std::abs(r.lhs / r.rhs - 1.0), 0.0, 1e-4);
  EXPECT_NEAR(std::abs(r.rhs - std::exp(-0.5)), 0.0, 1e-10);
  EXPECT_FALSE(r.truncation_warning);
}

TEST(MixedResolution, PhaseCase) {
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto disk = pb::disk_grid(6.0, 48, 128);
  const auto f = grid.sample([](double x) { return cplx(std::exp(-0.5 * (x - 0.5) * (x - 0.5))); });
  const auto g = grid.sample([](double x) { return cplx(std::exp(-0.5 * x * x), 0.2 * x * std::exp(-0.5 * x * x)); });
  const auto r = pb::mixed_resolution_scalar(pb::displaced_system(cplx(0, 1), cplx(0, 1), 64), f, g, grid, disk);
  EXPECT_LE(std::abs(r.lhs - r.rhs), 1e-4);
}

TEST(MixedResolution, CollapseRecoversInnerProduct) {
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto disk = pb::disk_grid(6.0, 48, 128);
  const cplx alpha(0.5, 0.3);
  const auto f = grid.sample([](double x) { return cplx(std::exp(-0.5 * (x - 0.5) * (x - 0.5))); });
  const auto g = grid.sample([](double x) { return cplx(x * std::exp(-0.5 * x * x), 0.3 * std::exp(-x * x)); });
  const auto r = pb::mixed_resolution_scalar(pb::displaced_system(alpha, std::conj(alpha), 64), f, g, grid, disk);
  EXPECT_LE(std::abs(r.lhs - pb::inner_product(f, g, grid)), 1e-4);
  EXPECT_LE(std::abs(r.rhs - pb::inner_product(f, g, grid)), 1e-12);
}

TEST(LinearDeformation, TrivialChoice) {
  const auto d = pb::linear_deformation_system(pb::OneParameterDeformation{0.0}, 16);
  const auto l = pb::fock_ladders(16);
  EXPECT_EQ(d.choice, 2);
  EXPECT_LE((d.A - l.a).norm(), 0.0);
  EXPECT_LE((d.B - l.a_dag).norm(), 0.0);
}

TEST(LinearDeformation, CanonicalCommutator) {
  const auto two = pb::linear_deformation_system(pb::OneParameterDeformation{0.5}, 64);
  EXPECT_LE(pb::commutator_block_residual(two.A, two.B, 62), 1e-10);
  const auto three = pb::linear_deformation_system(pb::TwoParameterDeformation{1.5, 1.4}, 64);
  EXPECT_EQ(three.choice, 3);
  EXPECT_LE(pb::commutator_block_residual(three.A, three.B, 62), 1e-10);
}

TEST(LinearDeformation, VacuaAndNormalisation) {
  const auto d = pb::linear_deformation_system(pb::OneParameterDeformation{0.3}, 64);
  EXPECT_NEAR(d.phi0.norm(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(d.psi0.dot(d.phi0) - 1.0), 0.0, 1e-14);
  EXPECT_LE((d.A * d.phi0).norm(), 1e-10);
  EXPECT_LE((d.B.adjoint() * d.psi0).norm(), 1e-10);
  EXPECT_LE(d.vacuum_tail, 1e-10);

  // Slow geometric decay: resolved only with more levels.
  const auto slow = pb::linear_deformation_system(pb::TwoParameterDeformation{1.5, 1.4}, 64);
  EXPECT_GT(slow.vacuum_tail, 1e-8);
  EXPECT_LT(pb::linear_deformation_system(pb::TwoParameterDeformation{1.5, 1.4}, 256).vacuum_tail, 1e-8);
}

TEST(LinearDeformation, ParameterDomains) {
  using pb::ParameterError;
  EXPECT_THROW(pb::linear_deformation_system(pb::OneParameterDeformation{1.0}, 32), ParameterError);
  EXPECT_THROW(pb::linear_deformation_system(pb::OneParameterDeformation{-1.2}, 32), ParameterError);
  EXPECT_THROW(pb::linear_deformation_system(pb::TwoParameterDeformation{1.0, 1.1}, 32), ParameterError);
  // 1 + 1/(1.5^2 - 1) = 1.8
  EXPECT_THROW(pb::linear_deformation_system(pb::TwoParameterDeformation{1.5, 1.8}, 32), ParameterError);
  EXPECT_THROW(pb::linear_deformation_system(pb::TwoParameterDeformation{1.5, 1.0}, 32), ParameterError);
  EXPECT_NO_THROW(pb::linear_deformation_system(pb::TwoParameterDeformation{1.5, 1.79}, 32));
}

TEST(TildeCoherent, CollapseAndNegativeControl) {
  const auto disk = pb::disk_grid(6.0, 40, 64);
  const auto e0 = unit(64, 0);
  const auto collapse = pb::proposition_resolution_check(pb::as_pair(pb::displaced_system(0.5, 0.5, 64)), e0, e0, disk);
  EXPECT_NEAR(std::abs(collapse.value - 1.0), 0.0, 1e-4);
  EXPECT_FALSE(collapse.truncation_warning);

  const auto displaced = pb::proposition_resolution_check(pb::as_pair(pb::displaced_system(1.0, 0.0, 64)), e0, e0, disk);
  EXPECT_GE(std::abs(displaced.value - displaced.expected) / std::abs(displaced.expected), 0.1);
}
