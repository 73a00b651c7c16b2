#include "pseudoboson/quadrature.hpp"

#include <cmath>

#include "pseudoboson/errors.hpp"
#include "pseudoboson/wavefunction.hpp"

namespace pseudoboson {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw ContractViolation("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_order.
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double pn = order == 1 ? x : p1;
      const double pnm1 = order == 1 ? 1.0 : p0;
      dp = order * (x * pn - pnm1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

RealLineGrid real_line_grid(double L, int points_per_unit) {
  if (!(L >= 5.0)) throw ContractViolation("real_line_grid: L must be at least 5");
  if (points_per_unit < 16) throw ContractViolation("real_line_grid: need at least 16 points per unit");
  constexpr int kPanelOrder = 16;
  const auto rule = gauss_legendre(kPanelOrder);
  const int panels = static_cast<int>(std::ceil(2.0 * L * points_per_unit / kPanelOrder));
  const double width = 2.0 * L / panels;

  RealLineGrid grid;
  grid.half_width = L;
  grid.nodes.reserve(static_cast<std::size_t>(panels * kPanelOrder));
  grid.weights.resize(panels * kPanelOrder);
  Eigen::Index k = 0;
  for (int p = 0; p < panels; ++p) {
    const double mid = -L + (p + 0.5) * width;
    for (int j = 0; j < kPanelOrder; ++j) {
      grid.nodes.push_back(mid + 0.5 * width * rule.nodes[static_cast<std::size_t>(j)]);
      grid.weights[k++] = 0.5 * width * rule.weights[static_cast<std::size_t>(j)];
    }
  }
  return grid;
}

DiskGrid disk_grid(double R, int radial_points, int angular_points) {
  if (!(R >= 3.0)) throw ContractViolation("disk_grid: R must be at least 3");
  if (radial_points < 40) throw ContractViolation("disk_grid: need at least 40 radial points");
  if (angular_points < 64) throw ContractViolation("disk_grid: need at least 64 angular points");
  const auto rule = gauss_legendre(radial_points);
  DiskGrid grid;
  grid.radius = R;
  grid.nodes.reserve(static_cast<std::size_t>(radial_points * angular_points));
  grid.weights.resize(static_cast<Eigen::Index>(radial_points) * angular_points);
  const double dtheta = 2.0 * kPi / angular_points;
  Eigen::Index k = 0;
  for (int i = 0; i < radial_points; ++i) {
    const double r = 0.5 * R * (rule.nodes[static_cast<std::size_t>(i)] + 1.0);
    const double wr = 0.5 * R * rule.weights[static_cast<std::size_t>(i)];
    for (int j = 0; j < angular_points; ++j) {
      grid.nodes.push_back(std::polar(r, j * dtheta));
      grid.weights[k++] = wr * r * dtheta / kPi;
    }
  }
  return grid;
}

cplx inner_product(const GridFunction& f, const GridFunction& g, const RealLineGrid& grid) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  if (f.size() != n || g.size() != n) throw ContractViolation("inner_product: sample size mismatch");
  cplx acc{};
  for (Eigen::Index i = 0; i < n; ++i) acc += grid.weights[i] * std::conj(f[i]) * g[i];
  return acc;
}

double l2_norm(const GridFunction& f, const RealLineGrid& grid) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  if (f.size() != n) throw ContractViolation("l2_norm: sample size mismatch");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) acc += grid.weights[i] * std::norm(f[i]);
  return std::sqrt(acc);
}

GramResult gram_matrix(const SuperpotentialSystem& system, int n_max, const RealLineGrid& grid) {
  if (n_max < 0) throw ContractViolation("gram_matrix: n_max must be nonnegative");
  decay_certificate(system, Side::A, grid.half_width);
  decay_certificate(system, Side::B, grid.half_width);

  const Eigen::MatrixXcd phi = sample_phi_family(system, n_max, grid.nodes);
  const Eigen::MatrixXcd psi = sample_psi_family(system, n_max, grid.nodes);
  const cplx nu = (psi.col(0).conjugate().array() * grid.weights.array() * phi.col(0).array()).sum();
  if (std::abs(nu) < 1e-12) throw DegenerateNormalizer("gram_matrix: <Psi_0, phi_0> vanishes");
  GramResult out;
  out.normalizer = nu;
  out.matrix = psi.adjoint() * grid.weights.asDiagonal() * phi / nu;
  return out;
}

IdentityDeviation identity_deviation(const Eigen::MatrixXcd& m) {
  IdentityDeviation d;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j) d.diagonal = std::max(d.diagonal, std::abs(m(i, j) - 1.0));
      else d.off_diagonal = std::max(d.off_diagonal, std::abs(m(i, j)));
    }
  }
  return d;
}

}  // namespace pseudoboson
