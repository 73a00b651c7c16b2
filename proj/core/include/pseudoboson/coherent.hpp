#pragma once

#include <vector>

#include "pseudoboson/quadrature.hpp"
#include "pseudoboson/system.hpp"
#include "pseudoboson/types.hpp"

namespace pseudoboson {

/// phi(z) = e^{-|z|^2/2} sum_n z^n/sqrt(n!) phi_n and the matching Psi(z),
/// truncated after n_trunc terms and sampled on a grid.
struct BiCoherentPair {
  cplx z;
  GridFunction phi_values;
  GridFunction psi_values;
  int n_trunc = 0;
  /// e^{-|z|^2/2} sum_{n > n_trunc} |z|^n / sqrt(n!)
  double tail_bound = 0.0;
};

/// Largest admissible tail for a valid BiCoherentPair.
inline constexpr double kMaxCoherentTail = 1e-10;

/// ceil(|z|^2 + 12 |z| + 20)
int default_truncation(cplx z);
double series_tail_bound(cplx z, int n_trunc);

/// Throws TruncationError when the series tail bound exceeds kMaxCoherentTail.
BiCoherentPair bicoherent_state(const SuperpotentialSystem& system, cplx z, int n_trunc,
                                const RealLineGrid& grid);

struct EigenResidual {
  double phi = 0.0;  ///< || (a - z) phi(z) ||
  double psi = 0.0;  ///< || (b^dag - z) Psi(z) ||
};

/// Applies the ladder relations a phi_n = sqrt(n) phi_{n-1} and
/// b^dag Psi_n = sqrt(n) Psi_{n-1} to the truncated series term by term and
/// measures the L2 norm of what is left. No tail validation is done here.
EigenResidual eigen_residual(const SuperpotentialSystem& system, cplx z, int n_trunc,
                             const RealLineGrid& grid);

enum class ResolutionKind { PhiPsi, PsiPhi, PhiPhi, PsiPsi };

struct ResolutionResult {
  /// Integral divided by the biorthogonality normaliser; compare with <f, g>
  /// (PhiPsi, PsiPhi), <f, S^{-1} g> (PhiPhi) or <f, S g> (PsiPsi).
  cplx value;
  /// (1/pi) \int <f, left(z)> <right(z), g> d^2z over the disk.
  cplx raw_integral;
  /// <Psi_0, phi_0> or its conjugate, whichever the kind requires.
  cplx normalizer;
  /// Majorant of the contribution from |z| > R.
  double estimated_truncation = 0.0;
  bool truncation_warning = false;
};

/// Weak-form resolution of the identity over the disk. The series are
/// truncated at default_truncation(R).
ResolutionResult resolution_check(const SuperpotentialSystem& system, ResolutionKind kind,
                                  const GridFunction& f, const GridFunction& g,
                                  const DiskGrid& disk, const RealLineGrid& grid);

/// {0, +-0.5, +-1, +-0.5 +- 0.5i}
std::vector<cplx> standard_z_lattice();

}  // namespace pseudoboson
