#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "pseudoboson/diagnostics.hpp"
#include "pseudoboson/errors.hpp"
#include "pseudoboson/wavefunction.hpp"

namespace pb = pseudoboson;
using pb::cplx;
using pb::Family;
using pb::Verdict;

namespace {

pb::SystemPtr build(Family family, cplx alpha, pb::BoundedFunction phi = pb::tanh_phi()) {
  pb::FamilyParams params;
  if (family == Family::BoundedPhi) params.phi = std::move(phi);
  return pb::make_system(family, alpha, params);
}

const double kLs[] = {8.0, 10.0, 12.0};

}  // namespace

TEST(Riesz, ImaginaryAlphaIsStable) {
  for (Family f : {Family::Gaussian, Family::CosinePerturbed, Family::BoundedPhi}) {
    const auto v = pb::riesz_ratio_sup(*build(f, cplx(0.0, 0.5)), kLs);
    EXPECT_EQ(v.verdict, Verdict::RieszSufficient) << pb::to_string(f);
    EXPECT_FALSE(v.forward_infinite);
    EXPECT_EQ(v.per_L.size(), 3u);
    EXPECT_NEAR(v.per_L.front().log_sup_forward, v.per_L.back().log_sup_forward, 1e-6);
  }
}

TEST(Riesz, RealAlphaDiverges) {
  // Gaussian: log|ratio| = -alpha x, so the supremum grows like alpha L.
  const auto v = pb::riesz_ratio_sup(*build(Family::Gaussian, 0.5), kLs);
  EXPECT_EQ(v.verdict, Verdict::NotRieszByDivergence);
  EXPECT_NEAR(v.divergence_slope, 0.5, 1e-9);
  EXPECT_NEAR(std::log(v.sup_forward), 6.0, 1e-9);
}

TEST(Riesz, CosineSupremumIsTwo) {
  // log|ratio| = 2 sin x for alpha = 0
  const auto v = pb::riesz_ratio_sup(*build(Family::CosinePerturbed, 0.0), kLs);
  EXPECT_NEAR(v.per_L.back().log_sup_forward, 2.0, 1e-4);
  EXPECT_NEAR(v.per_L.back().log_sup_inverse, 2.0, 1e-4);
}

TEST(Riesz, ShiftedOscillatorIsAlwaysStable) {
  const auto v = pb::riesz_ratio_sup(*build(Family::ShiftedOscillator, cplx(1.0, 0.3)), kLs);
  EXPECT_EQ(v.verdict, Verdict::RieszSufficient);
}

TEST(Riesz, SlowlySaturatingPhiIsInconclusive) {
  // 2 arctan still creeps towards pi over L = 8..12.
  const auto v = pb::riesz_ratio_sup(*build(Family::BoundedPhi, 0.0, pb::arctan_phi()), kLs);
  EXPECT_EQ(v.verdict, Verdict::Inconclusive);
  EXPECT_GT(v.divergence_slope, pb::kStableSlope);
  EXPECT_LT(v.divergence_slope, pb::kDivergentSlope);
}

TEST(Riesz, OverflowCountsAsInfinite) {
  const auto v = pb::riesz_ratio_sup(*build(Family::Gaussian, 80.0), kLs);
  EXPECT_TRUE(v.forward_infinite);
  EXPECT_TRUE(std::isinf(v.sup_forward));
  EXPECT_EQ(v.verdict, Verdict::NotRieszByDivergence);
}

TEST(Riesz, RejectsBadHalfWidths) {
  const auto sys = build(Family::Gaussian, 0.0);
  const double one[] = {8.0};
  const double unsorted[] = {10.0, 8.0};
  EXPECT_THROW(pb::riesz_ratio_sup(*sys, one), pb::ContractViolation);
  EXPECT_THROW(pb::riesz_ratio_sup(*sys, unsorted), pb::ContractViolation);
}

TEST(Expansion, BasisVectorHasUnitCoefficient) {
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto sys = build(Family::CosinePerturbed, cplx(0.0, 0.5));
  const auto f = pb::phi_n(sys, 3).sample(grid.nodes);
  const auto c = pb::expand(*sys, f, 10, pb::BasisSide::Phi, grid);
  for (int k = 0; k <= 10; ++k) EXPECT_NEAR(std::abs(c[k] - (k == 3 ? 1.0 : 0.0)), 0.0, 1e-10);
  const auto g = pb::psi_n(sys, 5).sample(grid.nodes);
  const auto d = pb::expand(*sys, g, 10, pb::BasisSide::Psi, grid);
  for (int k = 0; k <= 10; ++k) EXPECT_NEAR(std::abs(d[k] - (k == 5 ? 1.0 : 0.0)), 0.0, 1e-10);
}

TEST(Expansion, ConvergesForTheOscillator) {
  // exp(-(x-1)^2/2) is a coherent state of the alpha = 0 oscillator, so its
  // coefficients fall off like 2^{-n/2} / sqrt(n!).
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto sys = build(Family::Gaussian, 0.0);
  const auto target = grid.sample([](double x) { return cplx(std::exp(-0.5 * (x - 1.0) * (x - 1.0))); });
  const auto c = pb::expand(*sys, target, 30, pb::BasisSide::Phi, grid);
  EXPECT_LE(pb::reconstruct(*sys, c, pb::BasisSide::Phi, grid, target).residual, 1e-12);
}

TEST(Expansion, Idempotent) {
  const auto grid = pb::real_line_grid(12.0, 32);
  for (Family f : {Family::Gaussian, Family::CosinePerturbed, Family::BoundedPhi}) {
    const auto sys = build(f, cplx(0.0, 0.5));
    const auto target = grid.sample([](double x) { return cplx(std::exp(-0.5 * x * x), 0.1 * x * std::exp(-x * x)); });
    const auto c = pb::expand(*sys, target, 40, pb::BasisSide::Phi, grid);
    const auto again = pb::expand(*sys, pb::reconstruct(*sys, c, pb::BasisSide::Phi, grid), 40,
                                  pb::BasisSide::Phi, grid);
    EXPECT_LE((again - c).cwiseAbs().maxCoeff(), 1e-8) << pb::to_string(f);
  }
}

TEST(Expansion, OrderIsCapped) {
  const auto grid = pb::real_line_grid(6.0, 16);
  const auto sys = build(Family::Gaussian, 0.0);
  const pb::GridFunction f = pb::GridFunction::Zero(static_cast<Eigen::Index>(grid.size()));
  EXPECT_THROW(pb::expand(*sys, f, pb::kMaxExpansionOrder + 1, pb::BasisSide::Phi, grid), pb::ContractViolation);
  EXPECT_THROW(pb::expand(*sys, pb::GridFunction::Zero(3), 4, pb::BasisSide::Phi, grid), pb::ContractViolation);
}

TEST(Frame, BiorthonormalRescaling) {
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto sys = build(Family::CosinePerturbed, cplx(0.0, 0.5));
  const auto b = pb::biorthonormal_basis(*sys, 20, grid);
  const Eigen::MatrixXcd g = b.psi.adjoint() * grid.weights.asDiagonal() * b.phi;
  EXPECT_LE((g - Eigen::MatrixXcd::Identity(21, 21)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Frame, EtaPhiMapsPsiToPhi) {
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto sys = build(Family::CosinePerturbed, cplx(0.0, 0.5));
  const auto b = pb::biorthonormal_basis(*sys, 30, grid);
  for (int n = 0; n <= 30; ++n) {
    const auto image = pb::frame_apply(*sys, b.psi.col(n), pb::FrameOp::EtaPhi, 30, grid);
    EXPECT_LE(pb::l2_norm(image - b.phi.col(n), grid), 1e-7) << n;
    const auto back = pb::frame_apply(*sys, b.phi.col(n), pb::FrameOp::EtaPsi, 30, grid);
    EXPECT_LE(pb::l2_norm(back - b.psi.col(n), grid), 1e-7) << n;
  }
}

TEST(Frame, FrameOperatorsAreMutuallyInverseOnTheSpan) {
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto sys = build(Family::BoundedPhi, cplx(0.0, 0.5));
  const auto b = pb::biorthonormal_basis(*sys, 30, grid);
  Eigen::VectorXcd c(31);
  for (int k = 0; k <= 30; ++k) c[k] = cplx(1.0 / (1.0 + k), 0.25 * std::sin(k));
  const pb::GridFunction f = b.psi * c;
  const auto round =
      pb::frame_apply(*sys, pb::frame_apply(*sys, f, pb::FrameOp::EtaPhi, 30, grid), pb::FrameOp::EtaPsi, 30, grid);
  EXPECT_LE(pb::l2_norm(round - f, grid) / pb::l2_norm(f, grid), 1e-6);
}

TEST(Frame, OrthonormalCaseHasUnitBound) {
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto sys = build(Family::Gaussian, 0.0);
  EXPECT_NEAR(pb::frame_bound_estimate(*sys, pb::BasisSide::Phi, 20, grid), 1.0, 1e-10);

  const auto f = grid.sample([](double x) { return cplx(std::pow(pb::kPi, -0.25) * std::exp(-0.5 * (x - 1) * (x - 1))); });
  const auto sums = pb::bessel_partial_sums(*sys, f, 30, grid);
  EXPECT_TRUE(std::is_sorted(sums.begin(), sums.end()));
  EXPECT_NEAR(sums.back(), 1.0, 1e-10);
  // e^{-|z|^2} with z = 1/sqrt(2) for the n = 0 term
  EXPECT_NEAR(sums.front(), std::exp(-0.5), 1e-12);
}

TEST(Frame, BesselSumsNeedUnitNorm) {
  const auto grid = pb::real_line_grid(6.0, 16);
  const auto sys = build(Family::Gaussian, 0.0);
  const auto f = grid.sample([](double x) { return cplx(2.0 * std::exp(-x * x)); });
  EXPECT_THROW(pb::bessel_partial_sums(*sys, f, 5, grid), pb::ContractViolation);
}
