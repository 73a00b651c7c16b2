#include "pseudoboson/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Sparse>

#include "pseudoboson/errors.hpp"
#include "pseudoboson/matrix_exp.hpp"

namespace pseudoboson {

LadderMatrices fock_ladders(int dim) {
  if (dim < 2) throw ContractViolation("fock_ladders: dim must be at least 2");
  LadderMatrices m;
  m.a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i + 1 < dim; ++i) m.a(i, i + 1) = std::sqrt(i + 1.0);
  m.a_dag = m.a.adjoint();
  return m;
}

Eigen::VectorXcd coherent_vector(cplx alpha, int dim) {
  if (dim < 1) throw ContractViolation("coherent_vector: dim must be positive");
  Eigen::VectorXcd v(dim);
  v[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n) v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  return v;
}

double commutator_block_residual(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, int block) {
  if (block < 1 || block > A.rows()) throw ContractViolation("commutator_block_residual: bad block size");
  const Eigen::MatrixXcd c = A * B - B * A - Eigen::MatrixXcd::Identity(A.rows(), A.cols());
  return c.topLeftCorner(block, block).cwiseAbs().maxCoeff();
}

int minimum_dimension(cplx alpha, cplx beta) {
  const double m = std::max(std::abs(alpha), std::abs(beta));
  return static_cast<int>(std::ceil(16.0 + 10.0 * m * m));
}

DisplacedSystem displaced_system(cplx alpha, cplx beta, int dim) {
  const int needed = minimum_dimension(alpha, beta);
  if (dim < needed) {
    throw TruncationError("displaced_system: dim " + std::to_string(dim) + " is below the guard " +
                          std::to_string(needed));
  }
  const auto ladders = fock_ladders(dim);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  DisplacedSystem s;
  s.alpha = alpha;
  s.beta = beta;
  s.dim = dim;
  s.A = ladders.a - alpha * id;
  s.B = ladders.a_dag - beta * id;
  s.phi0 = coherent_vector(alpha, dim);
  s.psi0 = coherent_vector(std::conj(beta), dim);
  return s;
}

namespace {

// Applies (c^dag - shift) to v and returns the norm that the truncation
// dropped past the top level, relative to the norm of the result.
double raise(const Eigen::VectorXcd& v, cplx shift, Eigen::VectorXcd& out) {
  const auto dim = v.size();
  out.resize(dim);
  out[0] = -shift * v[0];
  for (Eigen::Index k = 1; k < dim; ++k) out[k] = std::sqrt(static_cast<double>(k)) * v[k - 1] - shift * v[k];
  const double dropped = std::sqrt(static_cast<double>(dim)) * std::abs(v[dim - 1]);
  const double n = out.norm();
  return n > 0.0 ? dropped / n : dropped;
}

}  // namespace

DisplacedFamilies displaced_vectors(const DisplacedSystem& system, int n_max) {
  if (n_max < 0 || 2 * n_max > system.dim)
    throw ContractViolation("displaced_vectors: n_max must lie in [0, dim/2]");
  DisplacedFamilies f;
  f.phi.push_back(system.phi0);
  f.psi.push_back(system.psi0);
  Eigen::VectorXcd next;
  for (int n = 1; n <= n_max; ++n) {
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    // B = c^dag - beta and A^dag = c^dag - conj(alpha) both raise.
    f.leakage += raise(f.phi.back(), system.beta, next);
    f.phi.push_back(next * inv);
    f.leakage += raise(f.psi.back(), std::conj(system.alpha), next);
    f.psi.push_back(next * inv);
  }
  if (f.leakage > kMaxLeakage) {
    std::ostringstream os;
    os << "displaced_vectors: truncation leakage " << f.leakage << " exceeds the admissible bound; raise dim";
    throw TruncationError(os.str());
  }
  return f;
}

cplx displaced_gram_factor(cplx alpha, cplx beta) {
  return std::exp(std::conj(alpha) * std::conj(beta) - 0.5 * (std::norm(alpha) + std::norm(beta)));
}

Eigen::MatrixXcd displaced_gram(const DisplacedSystem& system, int n_max) {
  const auto f = displaced_vectors(system, n_max);
  Eigen::MatrixXcd g(n_max + 1, n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= n_max; ++m) g(n, m) = f.phi[static_cast<std::size_t>(n)].dot(f.psi[static_cast<std::size_t>(m)]);
  return g;
}

std::vector<NormGrowthEntry> norm_growth_check(const DisplacedSystem& system, int n_max) {
  const auto f = displaced_vectors(system, n_max);
  const double gap = std::norm(std::conj(system.alpha) - system.beta);
  std::vector<NormGrowthEntry> out;
  for (int n = 0; n <= n_max; ++n)
    out.push_back({n, f.phi[static_cast<std::size_t>(n)].squaredNorm(), 1.0 + n * gap});
  return out;
}

Eigen::MatrixXcd v_phi_operator(const DisplacedSystem& system) {
  const auto l = fock_ladders(system.dim);
  return std::exp(-0.5 * std::norm(system.alpha)) * expm(system.alpha * l.a_dag) *
         expm(-system.beta * l.a);
}

Eigen::MatrixXcd v_psi_operator(const DisplacedSystem& system) {
  const auto l = fock_ladders(system.dim);
  return std::exp(-0.5 * std::norm(system.beta)) * expm(std::conj(system.beta) * l.a_dag) *
         expm(-std::conj(system.alpha) * l.a);
}

double v_operator_identity(const DisplacedSystem& system, int block) {
  if (block < 1 || 2 * block > system.dim)
    throw ContractViolation("v_operator_identity: block must lie in [1, dim/2]");
  const Eigen::MatrixXcd prod = v_psi_operator(system).adjoint() * v_phi_operator(system);
  const cplx factor =
      std::exp(system.alpha * system.beta - 0.5 * (std::norm(system.alpha) + std::norm(system.beta)));
  const Eigen::MatrixXcd diff =
      prod.topLeftCorner(block, block) - factor * Eigen::MatrixXcd::Identity(block, block);
  return diff.cwiseAbs().maxCoeff();
}

std::vector<double> bessel_partial_sums(const DisplacedFamilies& families, const Eigen::VectorXcd& f) {
  std::vector<double> sums;
  double acc = 0.0;
  for (const auto& phi : families.phi) {
    if (phi.size() != f.size()) throw ContractViolation("bessel_partial_sums: dimension mismatch");
    acc += std::norm(phi.dot(f));
    sums.push_back(acc);
  }
  return sums;
}

cplx position_coherent(cplx shift, cplx z, double x) {
  const cplx u = z + shift;
  static const double kNorm = std::pow(kPi, -0.25);
  return kNorm * std::exp(-0.5 * x * x + std::sqrt(2.0) * u * x - u.real() * u.real());
}

namespace {

// (1/pi) \int <f, eta(z + left)> <eta(z + right), g> over the given nodes.
struct MixedIntegrand {
  const GridFunction& f;
  const GridFunction& g;
  const RealLineGrid& grid;
  cplx left;
  cplx right;

  void at(cplx z, cplx& fa, cplx& gb) const {
    fa = 0.0;
    gb = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      const double x = grid.nodes[i];
      const double w = grid.weights[k];
      fa += w * std::conj(f[k]) * position_coherent(left, z, x);
      gb += w * std::conj(position_coherent(right, z, x)) * g[k];
    }
  }
};

constexpr double kMixedTruncationWarning = 1e-6;

}  // namespace

MixedResolution mixed_resolution_scalar(const DisplacedSystem& system, const GridFunction& f,
                                        const GridFunction& g, const RealLineGrid& grid,
                                        const DiskGrid& disk) {
  if (static_cast<std::size_t>(f.size()) != grid.size() ||
      static_cast<std::size_t>(g.size()) != grid.size())
    throw ContractViolation("mixed_resolution_scalar: sample count does not match the grid");

  const MixedIntegrand integrand{f, g, grid, system.alpha, std::conj(system.beta)};
  MixedResolution r;
  cplx fa;
  cplx gb;
  for (std::size_t k = 0; k < disk.size(); ++k) {
    integrand.at(disk.nodes[k], fa, gb);
    r.lhs += disk.weights[static_cast<Eigen::Index>(k)] * fa * gb;
  }

  const double ar = system.alpha.real() - system.beta.real();
  const double freq = std::sqrt(2.0) * (system.alpha.imag() + system.beta.imag());
  cplx overlap{};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    overlap += grid.weights[k] * std::conj(f[k]) * g[k] * std::polar(1.0, freq * grid.nodes[i]);
  }
  r.rhs = std::exp(-0.5 * ar * ar) * overlap;

  // Magnitude integral over the annulus R <= |z| <= R + 6 as the truncation estimate.
  constexpr int kRadial = 16;
  constexpr int kAngular = 64;
  constexpr double kWidth = 6.0;
  const auto rule = gauss_legendre(kRadial);
  for (int i = 0; i < kRadial; ++i) {
    const double rad = disk.radius + 0.5 * kWidth * (rule.nodes[static_cast<std::size_t>(i)] + 1.0);
    const double wr = 0.5 * kWidth * rule.weights[static_cast<std::size_t>(i)] * rad * 2.0 / kAngular;
    for (int j = 0; j < kAngular; ++j) {
      integrand.at(std::polar(rad, 2.0 * kPi * j / kAngular), fa, gb);
      r.estimated_truncation += wr * std::abs(fa) * std::abs(gb);
    }
  }
  r.truncation_warning = r.estimated_truncation > kMixedTruncationWarning;
  return r;
}

namespace {

void require_dim(int dim) {
  if (dim < 16) throw ContractViolation("linear_deformation_system: dim must be at least 16");
}

// Solves (p c + q c^dag) v = 0 by p sqrt(k+1) v_{k+1} + q sqrt(k) v_{k-1} = 0, v_0 = 1.
Eigen::VectorXcd annihilated_vector(cplx p, cplx q, int dim) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[0] = 1.0;
  for (int k = 1; k + 1 < dim; k += 2) v[k + 1] = -(q / p) * std::sqrt(k / (k + 1.0)) * v[k - 1];
  return v;
}

double top_fraction(const Eigen::VectorXcd& v, int rows) {
  return v.tail(rows).norm() / v.norm();
}

}  // namespace

LinearDeformation linear_deformation_system(const DeformationParams& params, int dim) {
  require_dim(dim);
  cplx p;
  cplx q;
  cplx r;
  cplx t;
  LinearDeformation d;
  d.params = params;
  if (const auto* one = std::get_if<OneParameterDeformation>(&params)) {
    const double s = one->s;
    if (!(s > -1.0 && s < 1.0)) throw ParameterError("linear_deformation_system: s must lie in (-1, 1)");
    d.choice = 2;
    p = 1.0;
    q = s;
    r = s;
    t = 1.0 + s * s;
  } else {
    const auto& two = std::get<TwoParameterDeformation>(params);
    const double a = two.alpha;
    const double mu = two.mu;
    if (!(a > 1.0)) throw ParameterError("linear_deformation_system: alpha must exceed 1");
    if (!(mu > 1.0 && mu < 1.0 + 1.0 / (a * a - 1.0)))
      throw ParameterError("linear_deformation_system: mu must lie in (1, 1 + 1/(alpha^2 - 1))");
    d.choice = 3;
    p = a;
    q = a / mu;
    r = mu * (a * a - 1.0) / a;
    t = a;
  }
  const auto l = fock_ladders(dim);
  d.A = p * l.a + q * l.a_dag;
  d.B = r * l.a + t * l.a_dag;

  // B^dag = conj(r) c^dag + conj(t) c
  d.phi0 = annihilated_vector(p, q, dim);
  d.phi0.normalize();
  d.psi0 = annihilated_vector(std::conj(t), std::conj(r), dim);
  const int top = std::max(1, dim / 4);
  d.vacuum_tail = std::max(top_fraction(d.phi0, top), top_fraction(d.psi0, top));
  d.psi0 /= std::conj(d.psi0.dot(d.phi0));
  return d;
}

BiorthogonalPair as_pair(const DisplacedSystem& system) {
  return {system.A, system.B, system.phi0, system.psi0};
}

BiorthogonalPair as_pair(const LinearDeformation& deformation) {
  return {deformation.A, deformation.B, deformation.phi0, deformation.psi0};
}

namespace {

constexpr double kTopMassWarning = 1e-6;

}  // namespace

PropositionResult proposition_resolution_check(const BiorthogonalPair& pair,
                                               const Eigen::VectorXcd& f,
                                               const Eigen::VectorXcd& g, const DiskGrid& disk) {
  const auto dim = pair.A.rows();
  if (pair.A.cols() != dim || pair.B.rows() != dim || pair.B.cols() != dim ||
      pair.phi0.size() != dim || pair.psi0.size() != dim || f.size() != dim || g.size() != dim)
    throw ContractViolation("proposition_resolution_check: dimension mismatch");

  const Eigen::SparseMatrix<cplx> A = pair.A.sparseView();
  const Eigen::SparseMatrix<cplx> B = pair.B.sparseView();
  const Eigen::SparseMatrix<cplx> A_dag = A.adjoint();
  const Eigen::SparseMatrix<cplx> B_dag = B.adjoint();
  const int top = std::max<int>(1, static_cast<int>(dim / 8));
  const double f_norm = f.norm();
  const double g_norm = g.norm();

  PropositionResult r;
  r.expected = f.dot(g);
  for (std::size_t k = 0; k < disk.size(); ++k) {
    const cplx z = disk.nodes[k];
    const Eigen::SparseMatrix<cplx> gen_phi = z * B - std::conj(z) * A;
    const Eigen::SparseMatrix<cplx> gen_psi = z * A_dag - std::conj(z) * B_dag;
    const Eigen::VectorXcd phi = expm_multiply(gen_phi, pair.phi0);
    const Eigen::VectorXcd psi = expm_multiply(gen_psi, pair.psi0);
    const cplx left = f.dot(phi);
    const cplx right = psi.dot(g);
    r.value += disk.weights[static_cast<Eigen::Index>(k)] * left * right;
    const double top_error = phi.tail(top).norm() * f_norm * std::abs(right) +
                             std::abs(left) * psi.tail(top).norm() * g_norm;
    r.max_top_mass = std::max(r.max_top_mass, top_error);
  }
  r.truncation_warning = r.max_top_mass > kTopMassWarning;
  return r;
}

}  // namespace pseudoboson
