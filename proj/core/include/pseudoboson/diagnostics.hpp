#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "pseudoboson/quadrature.hpp"
#include "pseudoboson/system.hpp"
#include "pseudoboson/types.hpp"

namespace pseudoboson {

enum class Verdict { RieszSufficient, NotRieszByDivergence, Inconclusive };
std::string_view to_string(Verdict verdict) noexcept;

/// Log-suprema of |exp(2 w_a) / exp(x^2 + alpha x)| and its reciprocal on [-L, L].
struct RatioSupremum {
  double L = 0.0;
  double log_sup_forward = 0.0;
  double log_sup_inverse = 0.0;
};

/// Sufficient-condition check for boundedness of S and S^{-1}. A verdict of
/// RieszSufficient is not a proof, and NotRieszByDivergence only says the
/// sufficient condition visibly fails.
struct RieszVerdict {
  double sup_forward = 0.0;  ///< at the largest L
  double sup_inverse = 0.0;
  bool forward_infinite = false;
  bool inverse_infinite = false;
  Verdict verdict = Verdict::Inconclusive;
  /// Least-squares slope of the larger log-supremum against L.
  double divergence_slope = 0.0;
  std::vector<RatioSupremum> per_L;
};

/// Slope at or below which suprema count as stable.
inline constexpr double kStableSlope = 0.01;
/// Slope at or above which suprema count as divergent.
inline constexpr double kDivergentSlope = 0.1;

/// `L_list` must be ascending with at least two entries.
RieszVerdict riesz_ratio_sup(const SuperpotentialSystem& system, std::span<const double> L_list);

enum class BasisSide { Phi, Psi };
enum class FrameOp { EtaPhi, EtaPsi };

/// Largest supported truncation for expansions and frame sums.
inline constexpr int kMaxExpansionOrder = 40;

/// Sampled phi_n and Psi_n, columns 0..n_max, with <Psi_0, phi_0>.
struct BasisSamples {
  Eigen::MatrixXcd phi;
  Eigen::MatrixXcd psi;
  cplx normalizer;
};
BasisSamples sample_basis(const SuperpotentialSystem& system, int n_max, const RealLineGrid& grid);

/// Biorthonormal rescaling phi_n / sqrt(nu), Psi_n / conj(sqrt(nu)) with
/// nu = <Psi_0, phi_0>, so that <Psi_n, phi_m> = delta_nm.
BasisSamples biorthonormal_basis(const SuperpotentialSystem& system, int n_max,
                                 const RealLineGrid& grid);

/// c_k = <Psi_k, f> / <Psi_0, phi_0> for the phi basis, and
/// c_k = <phi_k, f> / <phi_0, Psi_0> for the Psi basis.
Eigen::VectorXcd expand(const SuperpotentialSystem& system, const GridFunction& f, int n_max,
                        BasisSide side, const RealLineGrid& grid);

GridFunction reconstruct(const SuperpotentialSystem& system, const Eigen::VectorXcd& coeffs,
                         BasisSide side, const RealLineGrid& grid);

struct Reconstruction {
  GridFunction values;
  double residual = 0.0;  ///< L2 norm of values - target
};
Reconstruction reconstruct(const SuperpotentialSystem& system, const Eigen::VectorXcd& coeffs,
                           BasisSide side, const RealLineGrid& grid, const GridFunction& target);

/// Running sums S_N = sum_{n <= N} |<phi_n, f>|^2 over the biorthonormal
/// family of the given side. `f` must have unit norm on the grid.
std::vector<double> bessel_partial_sums(const SuperpotentialSystem& system, const GridFunction& f,
                                        int n_max, const RealLineGrid& grid,
                                        BasisSide side = BasisSide::Phi);

/// Largest eigenvalue of the Gram matrix <f_n, f_m> of the biorthonormal
/// family, n, m <= n_max: an empirical Bessel bound for the finite section.
double frame_bound_estimate(const SuperpotentialSystem& system, BasisSide side, int n_max,
                            const RealLineGrid& grid);

/// Truncated frame operator eta f = sum_{n <= n_max} <f_n, f> f_n over the
/// biorthonormal family selected by `which`.
GridFunction frame_apply(const SuperpotentialSystem& system, const GridFunction& f, FrameOp which,
                         int n_max, const RealLineGrid& grid);

}  // namespace pseudoboson
