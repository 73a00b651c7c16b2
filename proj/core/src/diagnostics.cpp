#include "pseudoboson/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "pseudoboson/errors.hpp"
#include "pseudoboson/wavefunction.hpp"

namespace pseudoboson {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::RieszSufficient: return "riesz_sufficient";
    case Verdict::NotRieszByDivergence: return "not_riesz_by_divergence";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

const double kLogOverflow = std::log(1e300);

RatioSupremum ratio_sup_at(const SuperpotentialSystem& system, double L) {
  constexpr int kPointsPerUnit = 100;
  const int n = static_cast<int>(std::ceil(2.0 * L * kPointsPerUnit)) + 1;
  RatioSupremum out;
  out.L = L;
  out.log_sup_forward = -std::numeric_limits<double>::infinity();
  out.log_sup_inverse = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double x = -L + 2.0 * L * i / (n - 1);
    const double log_ratio = (2.0 * system.w_a(x) - x * x - system.alpha() * x).real();
    out.log_sup_forward = std::max(out.log_sup_forward, log_ratio);
    out.log_sup_inverse = std::max(out.log_sup_inverse, -log_ratio);
  }
  return out;
}

}  // namespace

RieszVerdict riesz_ratio_sup(const SuperpotentialSystem& system, std::span<const double> L_list) {
  if (L_list.size() < 2) throw ContractViolation("riesz_ratio_sup: need at least two half-widths");
  for (std::size_t i = 0; i < L_list.size(); ++i) {
    if (!(L_list[i] > 0.0)) throw ContractViolation("riesz_ratio_sup: half-widths must be positive");
    if (i > 0 && !(L_list[i] > L_list[i - 1]))
      throw ContractViolation("riesz_ratio_sup: half-widths must be ascending");
  }

  RieszVerdict v;
  for (double L : L_list) v.per_L.push_back(ratio_sup_at(system, L));

  const auto& last = v.per_L.back();
  v.forward_infinite = last.log_sup_forward > kLogOverflow;
  v.inverse_infinite = last.log_sup_inverse > kLogOverflow;
  v.sup_forward = v.forward_infinite ? std::numeric_limits<double>::infinity()
                                     : std::exp(last.log_sup_forward);
  v.sup_inverse = v.inverse_infinite ? std::numeric_limits<double>::infinity()
                                     : std::exp(last.log_sup_inverse);

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& r : v.per_L) {
    mean_x += r.L;
    mean_y += std::max(r.log_sup_forward, r.log_sup_inverse);
  }
  mean_x /= static_cast<double>(v.per_L.size());
  mean_y /= static_cast<double>(v.per_L.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& r : v.per_L) {
    const double dx = r.L - mean_x;
    sxy += dx * (std::max(r.log_sup_forward, r.log_sup_inverse) - mean_y);
    sxx += dx * dx;
  }
  v.divergence_slope = sxy / sxx;

  const bool infinite = v.forward_infinite || v.inverse_infinite;
  if (infinite || v.divergence_slope >= kDivergentSlope) v.verdict = Verdict::NotRieszByDivergence;
  else if (v.divergence_slope <= kStableSlope) v.verdict = Verdict::RieszSufficient;
  else v.verdict = Verdict::Inconclusive;
  return v;
}

namespace {

void check_order(int n_max, const char* where) {
  if (n_max < 0 || n_max > kMaxExpansionOrder) {
    throw ContractViolation(std::string(where) + ": n_max must lie in [0, " +
                            std::to_string(kMaxExpansionOrder) + "]");
  }
}

void check_samples(const GridFunction& f, const RealLineGrid& grid, const char* where) {
  if (static_cast<std::size_t>(f.size()) != grid.size())
    throw ContractViolation(std::string(where) + ": sample count does not match the grid");
}

const Eigen::MatrixXcd& family(const BasisSamples& b, BasisSide side) {
  return side == BasisSide::Phi ? b.phi : b.psi;
}

const Eigen::MatrixXcd& dual(const BasisSamples& b, BasisSide side) {
  return side == BasisSide::Phi ? b.psi : b.phi;
}

}  // namespace

BasisSamples sample_basis(const SuperpotentialSystem& system, int n_max, const RealLineGrid& grid) {
  check_order(n_max, "sample_basis");
  BasisSamples b;
  b.phi = sample_phi_family(system, n_max, grid.nodes);
  b.psi = sample_psi_family(system, n_max, grid.nodes);
  b.normalizer = (b.psi.col(0).conjugate().array() * grid.weights.array() * b.phi.col(0).array()).sum();
  if (std::abs(b.normalizer) < 1e-12)
    throw DegenerateNormalizer("sample_basis: <Psi_0, phi_0> vanishes");
  return b;
}

BasisSamples biorthonormal_basis(const SuperpotentialSystem& system, int n_max,
                                 const RealLineGrid& grid) {
  BasisSamples b = sample_basis(system, n_max, grid);
  const cplx root = std::sqrt(b.normalizer);
  b.phi /= root;
  b.psi /= std::conj(root);
  b.normalizer = 1.0;
  return b;
}

Eigen::VectorXcd expand(const SuperpotentialSystem& system, const GridFunction& f, int n_max,
                        BasisSide side, const RealLineGrid& grid) {
  check_samples(f, grid, "expand");
  const BasisSamples b = sample_basis(system, n_max, grid);
  const cplx nu = side == BasisSide::Phi ? b.normalizer : std::conj(b.normalizer);
  return dual(b, side).adjoint() * (grid.weights.array() * f.array()).matrix() / nu;
}

GridFunction reconstruct(const SuperpotentialSystem& system, const Eigen::VectorXcd& coeffs,
                         BasisSide side, const RealLineGrid& grid) {
  if (coeffs.size() == 0) throw ContractViolation("reconstruct: empty coefficient vector");
  const int n_max = static_cast<int>(coeffs.size()) - 1;
  check_order(n_max, "reconstruct");
  const Eigen::MatrixXcd basis = side == BasisSide::Phi
                                     ? sample_phi_family(system, n_max, grid.nodes)
                                     : sample_psi_family(system, n_max, grid.nodes);
  return basis * coeffs;
}

Reconstruction reconstruct(const SuperpotentialSystem& system, const Eigen::VectorXcd& coeffs,
                           BasisSide side, const RealLineGrid& grid, const GridFunction& target) {
  check_samples(target, grid, "reconstruct");
  Reconstruction r;
  r.values = reconstruct(system, coeffs, side, grid);
  r.residual = l2_norm(r.values - target, grid);
  return r;
}

std::vector<double> bessel_partial_sums(const SuperpotentialSystem& system, const GridFunction& f,
                                        int n_max, const RealLineGrid& grid, BasisSide side) {
  check_samples(f, grid, "bessel_partial_sums");
  const double norm = l2_norm(f, grid);
  if (std::abs(norm - 1.0) > 1e-8)
    throw ContractViolation("bessel_partial_sums: f must have unit norm on the grid");
  const BasisSamples b = biorthonormal_basis(system, n_max, grid);
  const Eigen::VectorXcd c = family(b, side).adjoint() * (grid.weights.array() * f.array()).matrix();
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(c.size()));
  double acc = 0.0;
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    acc += std::norm(c[n]);
    sums.push_back(acc);
  }
  return sums;
}

double frame_bound_estimate(const SuperpotentialSystem& system, BasisSide side, int n_max,
                            const RealLineGrid& grid) {
  const BasisSamples b = biorthonormal_basis(system, n_max, grid);
  const Eigen::MatrixXcd& f = family(b, side);
  Eigen::MatrixXcd gram = f.adjoint() * grid.weights.asDiagonal() * f;
  gram = 0.5 * (gram + gram.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

GridFunction frame_apply(const SuperpotentialSystem& system, const GridFunction& f, FrameOp which,
                         int n_max, const RealLineGrid& grid) {
  check_samples(f, grid, "frame_apply");
  const BasisSamples b = biorthonormal_basis(system, n_max, grid);
  const Eigen::MatrixXcd& fam = which == FrameOp::EtaPhi ? b.phi : b.psi;
  const Eigen::VectorXcd c = fam.adjoint() * (grid.weights.array() * f.array()).matrix();
  return fam * c;
}

}  // namespace pseudoboson
