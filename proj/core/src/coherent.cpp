#include "pseudoboson/coherent.hpp"

#include <cmath>
#include <sstream>

#include "pseudoboson/errors.hpp"
#include "pseudoboson/wavefunction.hpp"

namespace pseudoboson {

int default_truncation(cplx z) {
  const double r = std::abs(z);
  return static_cast<int>(std::ceil(r * r + 12.0 * r + 20.0));
}

double series_tail_bound(cplx z, int n_trunc) {
  if (n_trunc < 0) throw ContractViolation("series_tail_bound: n_trunc must be nonnegative");
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  // Terms are summed in log space; past the peak at n ~ r^2 they decay
  // superexponentially, so stop once they no longer register.
  double tail = 0.0;
  for (int n = n_trunc + 1;; ++n) {
    const double log_term = -0.5 * r * r + n * std::log(r) - 0.5 * std::lgamma(n + 1.0);
    const double term = std::exp(log_term);
    tail += term;
    if (n > r * r + 2 && term < 1e-30 * std::max(tail, 1e-300)) break;
    if (n > n_trunc + 100000) break;
  }
  return tail;
}

namespace {

// e^{-|z|^2/2} z^n / sqrt(n!), n = 0..n_trunc
Eigen::VectorXcd series_weights(cplx z, int n_trunc) {
  Eigen::VectorXcd c(n_trunc + 1);
  c[0] = std::exp(-0.5 * std::norm(z));
  for (int n = 1; n <= n_trunc; ++n) c[n] = c[n - 1] * z / std::sqrt(static_cast<double>(n));
  return c;
}

void check_trunc(int n_trunc, const char* where) {
  if (n_trunc < 0) throw ContractViolation(std::string(where) + ": n_trunc must be nonnegative");
}

}  // namespace

BiCoherentPair bicoherent_state(const SuperpotentialSystem& system, cplx z, int n_trunc,
                                const RealLineGrid& grid) {
  check_trunc(n_trunc, "bicoherent_state");
  BiCoherentPair pair;
  pair.z = z;
  pair.n_trunc = n_trunc;
  pair.tail_bound = series_tail_bound(z, n_trunc);
  if (pair.tail_bound > kMaxCoherentTail) {
    std::ostringstream os;
    os << "bicoherent_state: series tail " << pair.tail_bound << " exceeds the admissible bound; raise n_trunc";
    throw TruncationError(os.str());
  }
  const Eigen::VectorXcd c = series_weights(z, n_trunc);
  pair.phi_values = sample_phi_family(system, n_trunc, grid.nodes) * c;
  pair.psi_values = sample_psi_family(system, n_trunc, grid.nodes) * c;
  return pair;
}

EigenResidual eigen_residual(const SuperpotentialSystem& system, cplx z, int n_trunc,
                             const RealLineGrid& grid) {
  check_trunc(n_trunc, "eigen_residual");
  const Eigen::VectorXcd c = series_weights(z, n_trunc);
  // Lowered coefficients: sum_n c_n sqrt(n) f_{n-1} = sum_m c_{m+1} sqrt(m+1) f_m.
  Eigen::VectorXcd lowered = Eigen::VectorXcd::Zero(n_trunc + 1);
  for (int m = 0; m < n_trunc; ++m) lowered[m] = c[m + 1] * std::sqrt(m + 1.0);
  const Eigen::VectorXcd diff = lowered - z * c;

  EigenResidual r;
  r.phi = l2_norm(sample_phi_family(system, n_trunc, grid.nodes) * diff, grid);
  r.psi = l2_norm(sample_psi_family(system, n_trunc, grid.nodes) * diff, grid);
  return r;
}

namespace {

// Majorant of (1/pi) \int_{|z|>R} |<f, left(z)>| |<right(z), g>| d^2z using
// |<f, left(z)>| <= e^{-r^2/2} sum_n |F_n| r^n / sqrt(n!).
double outside_disk_majorant(const Eigen::VectorXcd& F, const Eigen::VectorXcd& G, double R) {
  constexpr int kSteps = 2000;
  constexpr double kSpan = 20.0;
  const double h = kSpan / kSteps;
  auto envelope = [](const Eigen::VectorXcd& coeffs, double r) {
    double acc = 0.0;
    for (Eigen::Index n = 0; n < coeffs.size(); ++n) {
      const double a = std::abs(coeffs[n]);
      if (a == 0.0) continue;
      acc += std::exp(std::log(a) - 0.5 * r * r + n * std::log(r) - 0.5 * std::lgamma(n + 1.0));
    }
    return acc;
  };
  double total = 0.0;
  for (int i = 0; i <= kSteps; ++i) {
    const double r = R + i * h;
    const double v = 2.0 * r * envelope(F, r) * envelope(G, r);
    total += (i == 0 || i == kSteps) ? 0.5 * v * h : v * h;
  }
  return total;
}

constexpr double kTruncationWarning = 1e-8;

}  // namespace

ResolutionResult resolution_check(const SuperpotentialSystem& system, ResolutionKind kind,
                                  const GridFunction& f, const GridFunction& g,
                                  const DiskGrid& disk, const RealLineGrid& grid) {
  if (static_cast<std::size_t>(f.size()) != grid.size() ||
      static_cast<std::size_t>(g.size()) != grid.size())
    throw ContractViolation("resolution_check: sample count does not match the grid");

  const int n_trunc = default_truncation(cplx(disk.radius, 0.0));
  const Eigen::MatrixXcd phi = sample_phi_family(system, n_trunc, grid.nodes);
  const Eigen::MatrixXcd psi = sample_psi_family(system, n_trunc, grid.nodes);
  const cplx nu = (psi.col(0).conjugate().array() * grid.weights.array() * phi.col(0).array()).sum();
  if (std::abs(nu) < 1e-12) throw DegenerateNormalizer("resolution_check: <Psi_0, phi_0> vanishes");

  const bool left_phi = kind == ResolutionKind::PhiPsi || kind == ResolutionKind::PhiPhi;
  const bool right_psi = kind == ResolutionKind::PhiPsi || kind == ResolutionKind::PsiPsi;
  const Eigen::MatrixXcd& left = left_phi ? phi : psi;
  const Eigen::MatrixXcd& right = right_psi ? psi : phi;

  // F_n = <f, left_n>, G_n = <right_n, g>
  const Eigen::VectorXcd wf = grid.weights.cast<cplx>().cwiseProduct(f);
  const Eigen::VectorXcd wg = grid.weights.cast<cplx>().cwiseProduct(g);
  const Eigen::VectorXcd F = (left.adjoint() * wf).conjugate();
  const Eigen::VectorXcd G = right.adjoint() * wg;

  // <f, left(z)> = e^{-|z|^2/2} sum_n F_n z^n / sqrt(n!)
  // <right(z), g> = e^{-|z|^2/2} sum_n G_n conj(z)^n / sqrt(n!)
  cplx integral{};
  for (std::size_t k = 0; k < disk.size(); ++k) {
    const cplx z = disk.nodes[k];
    const Eigen::VectorXcd c = series_weights(z, n_trunc);
    const cplx lhs = (F.array() * c.array()).sum();
    const cplx rhs = (G.array() * c.conjugate().array()).sum();
    integral += disk.weights[static_cast<Eigen::Index>(k)] * lhs * rhs;
  }
  ResolutionResult r;
  r.raw_integral = integral;
  const bool divide_by_nu = kind == ResolutionKind::PhiPsi || kind == ResolutionKind::PsiPsi;
  r.normalizer = divide_by_nu ? nu : std::conj(nu);
  r.value = integral / r.normalizer;
  r.estimated_truncation = outside_disk_majorant(F, G, disk.radius) / std::abs(r.normalizer);
  r.truncation_warning = r.estimated_truncation > kTruncationWarning;
  return r;
}

std::vector<cplx> standard_z_lattice() {
  return {cplx(0, 0),     cplx(0.5, 0),    cplx(-0.5, 0),   cplx(1, 0),     cplx(-1, 0),
          cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(-0.5, 0.5), cplx(-0.5, -0.5)};
}

}  // namespace pseudoboson
