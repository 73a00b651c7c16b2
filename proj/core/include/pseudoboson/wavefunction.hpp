#pragma once

#include <span>

#include "pseudoboson/polynomial.hpp"
#include "pseudoboson/system.hpp"
#include "pseudoboson/types.hpp"

namespace pseudoboson {

/// Exponential factor multiplying the polynomial part of a WaveFunction.
enum class ExpTag {
  Wa,         ///< exp(-w_a(x))
  WbBar,      ///< exp(-conj(w_b(x)))
  HalfGauss,  ///< exp(-(x^2 + alpha x) / 2)
};

enum class LadderOp { a, b, a_dag, b_dag, N, N_dag };

/// scale * poly(x) * exp-factor(x), in exact closed form.
struct WaveFunction {
  Polynomial poly;
  ExpTag tag = ExpTag::Wa;
  cplx scale{1.0, 0.0};
  SystemPtr system;

  cplx operator()(double x) const;
  GridFunction sample(std::span<const double> nodes) const;
  /// scale * poly, the coefficients that identity checks compare.
  Polynomial scaled_poly() const { return poly * scale; }
  bool is_zero() const noexcept { return poly.is_zero() || scale == cplx{}; }
};

/// phi_n = p_n exp(-w_a) / sqrt(n! 2^n), normalised so phi_0(0) e^{w_a(0)} = 1.
WaveFunction phi_n(const SystemPtr& system, int n);
/// Psi_n = conj(p_n) exp(-conj(w_b)) / sqrt(n! 2^n).
WaveFunction psi_n(const SystemPtr& system, int n);
/// Orthonormal family p_n exp(-(x^2 + alpha x)/2) / sqrt(sqrt(pi) e^{alpha^2/4} 2^n n!).
/// Only available for real alpha; throws UnsupportedCase otherwise.
WaveFunction hat_phi_n(const SystemPtr& system, int n);

/// Exact action of a, b, N on exp(-w_a) functions and of a^dag, b^dag, N^dag
/// on exp(-conj(w_b)) functions. Any other pairing throws ContractViolation.
WaveFunction apply_op(LadderOp op, const WaveFunction& wf);

/// Closed-form image of an exp(-w_a) function under S; the result carries the
/// exp(-conj(w_b)) factor, so S phi_n == psi_n exactly.
WaveFunction apply_S(const WaveFunction& wf);

enum class SDirection { S, SInverse };

/// Grid action of S or S^{-1}. S multiplies by exp(w_a - w_b) and, for complex
/// superpotentials, conjugates the result; S^{-1} conjugates first and divides.
/// Throws UnboundedMultiplier if the multiplier exceeds 1e300 at any node.
GridFunction apply_S(const SuperpotentialSystem& system, const GridFunction& f,
                     std::span<const double> nodes, SDirection direction);

cplx eval_wavefunction(const WaveFunction& wf, double x);

/// max_k |(scale poly)_k - (scale' poly')_k|. Both arguments must carry the
/// same exponential factor.
double coefficient_residual(const WaveFunction& lhs, const WaveFunction& rhs);

/// Samples phi_0..phi_{n_max} (or Psi_0..Psi_{n_max}) column by column via the
/// normalised three-term recurrence
///   h_{n+1} = ((2x + alpha) h_n - sqrt(2n) h_{n-1}) / sqrt(2(n+1)),
/// which stays accurate for degrees where monomial Horner evaluation does not.
Eigen::MatrixXcd sample_phi_family(const SuperpotentialSystem& system, int n_max,
                                   std::span<const double> nodes);
Eigen::MatrixXcd sample_psi_family(const SuperpotentialSystem& system, int n_max,
                                   std::span<const double> nodes);

}  // namespace pseudoboson
