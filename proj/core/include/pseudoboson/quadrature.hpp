#pragma once

#include <vector>

#include "pseudoboson/system.hpp"
#include "pseudoboson/types.hpp"

namespace pseudoboson {

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// Composite Gauss-Legendre rule on [-L, L].
struct RealLineGrid {
  double half_width = 0.0;
  std::vector<double> nodes;
  Eigen::VectorXd weights;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  GridFunction sample(F&& f) const {
    GridFunction out(static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i) out[static_cast<Eigen::Index>(i)] = f(nodes[i]);
    return out;
  }
};

/// Panels of 16-point Gauss-Legendre, at least `points_per_unit` nodes per
/// unit length. Requires L >= 5 and points_per_unit >= 16.
RealLineGrid real_line_grid(double L, int points_per_unit);

/// Polar product rule on the disk |z| <= R: Gauss-Legendre in radius times
/// the trapezoid rule in angle. Weights include the Jacobian r and the 1/pi
/// measure prefactor, so sum(weights) = R^2.
struct DiskGrid {
  double radius = 0.0;
  std::vector<cplx> nodes;
  Eigen::VectorXd weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Requires R >= 3, radial_points >= 40 and angular_points >= 64.
DiskGrid disk_grid(double R, int radial_points, int angular_points);

/// sum_i w_i conj(f_i) g_i; conjugate-linear in the first argument.
cplx inner_product(const GridFunction& f, const GridFunction& g, const RealLineGrid& grid);
double l2_norm(const GridFunction& f, const RealLineGrid& grid);

struct GramResult {
  /// G(n, m) = <Psi_n, phi_m> / <Psi_0, phi_0>
  Eigen::MatrixXcd matrix;
  /// <Psi_0, phi_0>
  cplx normalizer;
};

/// Requires decay certificates on both sides at the grid half-width (throws
/// DecayNotEstablished otherwise) and |<Psi_0, phi_0>| >= 1e-12 (throws
/// DegenerateNormalizer).
GramResult gram_matrix(const SuperpotentialSystem& system, int n_max, const RealLineGrid& grid);

/// max |G - I| over off-diagonal entries and over the diagonal, respectively.
struct IdentityDeviation {
  double off_diagonal = 0.0;
  double diagonal = 0.0;
};
IdentityDeviation identity_deviation(const Eigen::MatrixXcd& m);

}  // namespace pseudoboson
