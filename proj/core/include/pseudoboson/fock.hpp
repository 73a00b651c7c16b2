#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "pseudoboson/quadrature.hpp"
#include "pseudoboson/types.hpp"

namespace pseudoboson {

// Truncated Fock-space models. Vectors are coefficient columns in the
// number basis e_0, ..., e_{dim-1}; a e_k = sqrt(k) e_{k-1}.

struct LadderMatrices {
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd a_dag;
};

/// Requires dim >= 2.
LadderMatrices fock_ladders(int dim);

/// e^{-|alpha|^2/2} sum_n alpha^n / sqrt(n!) e_n, truncated to dim entries.
Eigen::VectorXcd coherent_vector(cplx alpha, int dim);

/// Max entry of [A, B] - 1 on the top-left block x block corner.
double commutator_block_residual(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, int block);

/// A = a - alpha, B = a^dag - beta with vacua phi0 = U(alpha) e_0 and
/// psi0 = U(conj(beta)) e_0.
struct DisplacedSystem {
  cplx alpha;
  cplx beta;
  int dim = 0;
  Eigen::MatrixXcd A;
  Eigen::MatrixXcd B;
  Eigen::VectorXcd phi0;
  Eigen::VectorXcd psi0;
};

/// 16 + 10 max(|alpha|, |beta|)^2, rounded up.
int minimum_dimension(cplx alpha, cplx beta);

/// Throws TruncationError when dim < minimum_dimension(alpha, beta).
DisplacedSystem displaced_system(cplx alpha, cplx beta, int dim);

/// Largest tolerated mass pushed past the top Fock level.
inline constexpr double kMaxLeakage = 1e-8;

/// phi_n = B^n phi0 / sqrt(n!), Psi_n = (A^dag)^n psi0 / sqrt(n!).
struct DisplacedFamilies {
  std::vector<Eigen::VectorXcd> phi;
  std::vector<Eigen::VectorXcd> psi;
  /// Accumulated norm of the components that the truncated raising
  /// operators dropped off the top level, relative to the vector norms.
  double leakage = 0.0;
};

/// Requires n_max <= dim / 2. Throws TruncationError when the leakage
/// exceeds kMaxLeakage.
DisplacedFamilies displaced_vectors(const DisplacedSystem& system, int n_max);

/// exp(conj(alpha) conj(beta) - (|alpha|^2 + |beta|^2) / 2)
cplx displaced_gram_factor(cplx alpha, cplx beta);

/// G(n, m) = <phi_n, Psi_m>.
Eigen::MatrixXcd displaced_gram(const DisplacedSystem& system, int n_max);

struct NormGrowthEntry {
  int n = 0;
  double norm_sq = 0.0;
  double lower_bound = 0.0;  ///< 1 + n |conj(alpha) - beta|^2
};

std::vector<NormGrowthEntry> norm_growth_check(const DisplacedSystem& system, int n_max);

/// V_phi = e^{-|alpha|^2/2} e^{alpha a^dag} e^{-beta a}
Eigen::MatrixXcd v_phi_operator(const DisplacedSystem& system);
/// V_Psi = e^{-|beta|^2/2} e^{conj(beta) a^dag} e^{-conj(alpha) a}
Eigen::MatrixXcd v_psi_operator(const DisplacedSystem& system);

/// Max entry of V_Psi^dag V_phi - exp(alpha beta - (|alpha|^2 + |beta|^2)/2)
/// on the top-left block x block corner. Requires block <= dim / 2.
double v_operator_identity(const DisplacedSystem& system, int block);

/// S_N = sum_{n <= N} |<phi_n, f>|^2 for the displaced phi family.
std::vector<double> bessel_partial_sums(const DisplacedFamilies& families, const Eigen::VectorXcd& f);

/// Position-space coherent state
///   eta(x; u) = pi^{-1/4} exp(-x^2/2 + sqrt(2) u x - Re(u)^2),  u = z + shift.
/// Use shift = alpha for eigenstates of A_alpha and shift = conj(beta) for
/// eigenstates of B_beta^dag.
cplx position_coherent(cplx shift, cplx z, double x);

struct MixedResolution {
  /// (1/pi) \int <f, Phi_alpha(z)> <Psi_beta(z), g> d^2z by nested quadrature.
  cplx lhs;
  /// e^{-(Re alpha - Re beta)^2/2} \int conj(f) g e^{i sqrt(2) (Im alpha + Im beta) x} dx
  cplx rhs;
  double estimated_truncation = 0.0;
  bool truncation_warning = false;
};

MixedResolution mixed_resolution_scalar(const DisplacedSystem& system, const GridFunction& f,
                                        const GridFunction& g, const RealLineGrid& grid,
                                        const DiskGrid& disk);

/// a_s = c + s c^dag, b_s = s c + (1 + s^2) c^dag with -1 < s < 1.
struct OneParameterDeformation {
  double s = 0.0;
};

/// a = alpha c + (alpha/mu) c^dag, b = mu (alpha^2 - 1)/alpha c + alpha c^dag
/// with alpha > 1 and 1 < mu < 1 + 1/(alpha^2 - 1).
struct TwoParameterDeformation {
  double alpha = 0.0;
  double mu = 0.0;
};

using DeformationParams = std::variant<OneParameterDeformation, TwoParameterDeformation>;

struct LinearDeformation {
  int choice = 0;  ///< 2 for the one-parameter family, 3 for the two-parameter one
  DeformationParams params;
  Eigen::MatrixXcd A;
  Eigen::MatrixXcd B;
  /// Unit-norm vacuum of A and vacuum of B^dag scaled so <psi0, phi0> = 1.
  Eigen::VectorXcd phi0;
  Eigen::VectorXcd psi0;
  /// Largest relative norm of either vacuum on the top quarter of levels.
  double vacuum_tail = 0.0;
};

/// Throws ParameterError outside the admissible parameter domains. Vacua
/// that are not resolved at `dim` are reported through vacuum_tail.
LinearDeformation linear_deformation_system(const DeformationParams& params, int dim);

/// Operators and vacua consumed by the tilde-coherent resolution check.
struct BiorthogonalPair {
  Eigen::MatrixXcd A;
  Eigen::MatrixXcd B;
  Eigen::VectorXcd phi0;
  Eigen::VectorXcd psi0;
};

BiorthogonalPair as_pair(const DisplacedSystem& system);
BiorthogonalPair as_pair(const LinearDeformation& deformation);

struct PropositionResult {
  /// (1/pi) \int <f, phi~(z)> <Psi~(z), g> d^2z
  cplx value;
  /// <f, g>
  cplx expected;
  /// Largest weighted contribution of the top eighth of Fock levels.
  double max_top_mass = 0.0;
  bool truncation_warning = false;
};

/// phi~(z) = exp(z B - conj(z) A) phi0 and Psi~(z) = exp(z A^dag - conj(z) B^dag) psi0,
/// integrated over the disk.
PropositionResult proposition_resolution_check(const BiorthogonalPair& pair,
                                               const Eigen::VectorXcd& f,
                                               const Eigen::VectorXcd& g, const DiskGrid& disk);

}  // namespace pseudoboson
