#include <cmath>

#include <gtest/gtest.h>

#include "pseudoboson/errors.hpp"
#include "pseudoboson/system.hpp"

namespace pb = pseudoboson;
using pb::cplx;
using pb::Family;

namespace {

pb::SystemPtr build(Family family, cplx alpha, cplx beta = 0.0) {
  pb::FamilyParams params;
  params.beta = beta;
  if (family == Family::BoundedPhi) params.phi = pb::tanh_phi();
  return pb::make_system(family, alpha, params);
}

}  // namespace

TEST(System, FamilyNamesRoundTrip) {
  for (Family f : {Family::Gaussian, Family::CosinePerturbed, Family::BoundedPhi, Family::ShiftedOscillator})
    EXPECT_EQ(pb::family_from_string(pb::to_string(f)), f);
  EXPECT_FALSE(pb::family_from_string("quartic").has_value());
}

TEST(System, ConstraintsHoldForEveryFamily) {
  for (Family f : {Family::Gaussian, Family::CosinePerturbed, Family::BoundedPhi, Family::ShiftedOscillator}) {
    for (cplx alpha : {cplx(0.0), cplx(0.0, 0.5), cplx(0.5, 0.0), cplx(1.0, 0.3)}) {
      const auto sys = build(f, alpha, cplx(0.2, -0.1));
      const auto r = pb::constraint_residuals(*sys);
      EXPECT_LE(r.superpotential_sum, 1e-12) << pb::to_string(f);
      EXPECT_LE(r.antiderivative_sum, 1e-12) << pb::to_string(f);
      EXPECT_LE(r.derivative_mismatch, 1e-6) << pb::to_string(f);
    }
  }
}

TEST(System, AntiderivativeConvention) {
  const auto sys = build(Family::CosinePerturbed, cplx(0.0, 0.5), cplx(0.3, 0.1));
  EXPECT_EQ(sys->w_a(0.0), cplx(0.0));
  EXPECT_NEAR(std::abs(sys->w_b(0.0) - cplx(0.3, 0.1)), 0.0, 1e-15);
  EXPECT_NEAR(sys->W_a(0.0).real(), 1.0, 1e-15);
}

TEST(System, ShiftedOscillatorHasEqualSuperpotentials) {
  const auto sys = build(Family::ShiftedOscillator, cplx(0.8, 0.4));
  for (double x : {-3.0, 0.0, 2.5}) EXPECT_NEAR(std::abs(sys->W_a(x) - sys->W_b(x)), 0.0, 1e-15);
}

TEST(System, ComplexFlag) {
  EXPECT_FALSE(build(Family::Gaussian, 0.5)->is_complex());
  EXPECT_TRUE(build(Family::Gaussian, cplx(0.0, 0.5))->is_complex());
  EXPECT_TRUE(build(Family::Gaussian, 0.0, cplx(0.0, 1.0))->is_complex());
}

TEST(System, RejectsBadParameters) {
  EXPECT_THROW(pb::make_system(Family::Gaussian, cplx(NAN, 0.0)), pb::ParameterError);
  EXPECT_THROW(pb::make_system(Family::BoundedPhi, 0.0), pb::ParameterError);

  pb::BoundedFunction liar{"identity", [](double x) { return x; }, [](double) { return 1.0; }, -1.0, 1.0};
  pb::FamilyParams params;
  params.phi = liar;
  EXPECT_THROW(pb::make_system(Family::BoundedPhi, 0.0, params), pb::ParameterError);
}

TEST(System, BoundedFunctionsByName) {
  EXPECT_EQ(pb::bounded_function_from_string("tanh")->name, "tanh");
  EXPECT_EQ(pb::bounded_function_from_string("arctan")->name, "arctan");
  EXPECT_FALSE(pb::bounded_function_from_string("sin").has_value());
}

TEST(System, DescribeNamesTheFamily) {
  const auto sys = build(Family::BoundedPhi, cplx(0.0, 0.5));
  EXPECT_NE(sys->describe().find("bounded_phi"), std::string::npos);
  EXPECT_NE(sys->describe().find("tanh"), std::string::npos);
}

TEST(System, GaussianDecayCertificate) {
  // sup |x| - x^2/2 = 1/2 at |x| = 1
  const auto sys = build(Family::Gaussian, 0.0);
  const auto cert = pb::decay_certificate(*sys, pb::Side::A, 12.0);
  EXPECT_NEAR(cert.C, std::exp(0.5), 1e-4);
  EXPECT_NEAR(std::abs(cert.argmax), 1.0, 1e-2);
  EXPECT_EQ(cert.delta, 1.0);
  EXPECT_EQ(cert.lower, -12.0);
}

TEST(System, DecayCertificateOnBothSides) {
  for (Family f : {Family::Gaussian, Family::CosinePerturbed, Family::BoundedPhi, Family::ShiftedOscillator}) {
    const auto sys = build(f, cplx(0.0, 0.5));
    EXPECT_NO_THROW(pb::decay_certificate(*sys, pb::Side::A, 12.0));
    EXPECT_NO_THROW(pb::decay_certificate(*sys, pb::Side::B, 12.0));
  }
}

TEST(System, SlowDecayIsNotCertified) {
  // w_a = x^2 / 20: |x| - w_a peaks at |x| = 10, outside [-8, 8].
  const pb::SuperpotentialSystem slow(
      Family::Gaussian, 0.0, 0.0, [](double x) { return cplx(0.1 * x); },
      [](double x) { return cplx(0.05 * x * x); }, std::nullopt);
  EXPECT_THROW(pb::decay_certificate(slow, pb::Side::A, 8.0), pb::DecayNotEstablished);
  EXPECT_THROW(pb::decay_certificate(slow, pb::Side::A, 4.0), pb::ContractViolation);
}
