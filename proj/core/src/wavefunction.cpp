#include "pseudoboson/wavefunction.hpp"

#include <cmath>

#include "pseudoboson/errors.hpp"

namespace pseudoboson {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const double kLogOverflow = std::log(1e300);

void require_system(const SystemPtr& system, const char* where) {
  if (!system) throw ContractViolation(std::string(where) + ": null system");
}

void require_degree(int n, const char* where) {
  if (n < 0) throw ContractViolation(std::string(where) + ": n must be nonnegative");
}

// 1 / sqrt(n! 2^n), accumulated in log space.
double inverse_norm(int n) {
  return std::exp(-0.5 * (std::lgamma(n + 1.0) + n * std::log(2.0)));
}

cplx exp_factor(const WaveFunction& wf, double x) {
  const auto& s = *wf.system;
  switch (wf.tag) {
    case ExpTag::Wa: return std::exp(-s.w_a(x));
    case ExpTag::WbBar: return std::exp(-std::conj(s.w_b(x)));
    case ExpTag::HalfGauss: return std::exp(-0.5 * (x * x + s.alpha() * x));
  }
  return {};
}

WaveFunction with_poly(const WaveFunction& wf, Polynomial poly) {
  return {std::move(poly), wf.tag, wf.scale, wf.system};
}

}  // namespace

cplx WaveFunction::operator()(double x) const {
  if (!system) throw ContractViolation("WaveFunction: null system");
  return scale * poly(x) * exp_factor(*this, x);
}

GridFunction WaveFunction::sample(std::span<const double> nodes) const {
  GridFunction out(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) out[static_cast<Eigen::Index>(i)] = (*this)(nodes[i]);
  return out;
}

cplx eval_wavefunction(const WaveFunction& wf, double x) { return wf(x); }

WaveFunction phi_n(const SystemPtr& system, int n) {
  require_system(system, "phi_n");
  require_degree(n, "phi_n");
  return {build_pn_family(system->alpha(), n).back(), ExpTag::Wa, inverse_norm(n), system};
}

WaveFunction psi_n(const SystemPtr& system, int n) {
  require_system(system, "psi_n");
  require_degree(n, "psi_n");
  return {build_pn_family(system->alpha(), n).back().conj(), ExpTag::WbBar, inverse_norm(n), system};
}

WaveFunction hat_phi_n(const SystemPtr& system, int n) {
  require_system(system, "hat_phi_n");
  require_degree(n, "hat_phi_n");
  const cplx alpha = system->alpha();
  if (alpha.imag() != 0.0) throw UnsupportedCase("hat_phi_n: complex alpha is not supported");
  const double a = alpha.real();
  const double log_norm_sq =
      0.5 * std::log(kPi) + a * a / 4.0 + n * std::log(2.0) + std::lgamma(n + 1.0);
  return {build_pn_family(alpha, n).back(), ExpTag::HalfGauss, std::exp(-0.5 * log_norm_sq), system};
}

WaveFunction apply_op(LadderOp op, const WaveFunction& wf) {
  if (!wf.system) throw ContractViolation("apply_op: null system");
  const bool on_a = wf.tag == ExpTag::Wa;
  const bool on_b = wf.tag == ExpTag::WbBar;
  const cplx alpha = wf.system->alpha();
  switch (op) {
    case LadderOp::a:
      if (!on_a) break;
      return with_poly(wf, wf.poly.derivative() * kInvSqrt2);
    case LadderOp::b:
      if (!on_a) break;
      return with_poly(wf, (Polynomial::linear(alpha, 2.0) * wf.poly - wf.poly.derivative()) * kInvSqrt2);
    case LadderOp::N:
      if (!on_a) break;
      return apply_op(LadderOp::b, apply_op(LadderOp::a, wf));
    case LadderOp::b_dag:
      if (!on_b) break;
      return with_poly(wf, wf.poly.derivative() * kInvSqrt2);
    case LadderOp::a_dag:
      if (!on_b) break;
      return with_poly(
          wf, (Polynomial::linear(std::conj(alpha), 2.0) * wf.poly - wf.poly.derivative()) * kInvSqrt2);
    case LadderOp::N_dag:
      if (!on_b) break;
      return apply_op(LadderOp::a_dag, apply_op(LadderOp::b_dag, wf));
  }
  throw ContractViolation("apply_op: operator does not act in closed form on this exponential factor");
}

WaveFunction apply_S(const WaveFunction& wf) {
  if (!wf.system) throw ContractViolation("apply_S: null system");
  if (wf.tag != ExpTag::Wa) throw ContractViolation("apply_S: closed form needs an exp(-w_a) factor");
  if (!wf.system->is_complex()) return {wf.poly, ExpTag::WbBar, wf.scale, wf.system};
  return {wf.poly.conj(), ExpTag::WbBar, std::conj(wf.scale), wf.system};
}

GridFunction apply_S(const SuperpotentialSystem& system, const GridFunction& f,
                     std::span<const double> nodes, SDirection direction) {
  if (static_cast<std::size_t>(f.size()) != nodes.size())
    throw ContractViolation("apply_S: sample count does not match node count");
  const bool complex = system.is_complex();
  GridFunction out(f.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes[i];
    const cplx log_r = system.w_a(x) - system.w_b(x);
    const double log_mult = direction == SDirection::S ? log_r.real() : -log_r.real();
    if (log_mult > kLogOverflow) throw UnboundedMultiplier(i, x);
    const cplx fi = f[static_cast<Eigen::Index>(i)];
    if (direction == SDirection::S) {
      const cplx v = std::exp(log_r) * fi;
      out[static_cast<Eigen::Index>(i)] = complex ? std::conj(v) : v;
    } else {
      const cplx g = complex ? std::conj(fi) : fi;
      out[static_cast<Eigen::Index>(i)] = std::exp(-log_r) * g;
    }
  }
  return out;
}

double coefficient_residual(const WaveFunction& lhs, const WaveFunction& rhs) {
  if (lhs.tag != rhs.tag)
    throw ContractViolation("coefficient_residual: exponential factors differ");
  return max_abs_coeff_diff(lhs.scaled_poly(), rhs.scaled_poly());
}

namespace {

Eigen::MatrixXcd sample_family(cplx alpha, int n_max, std::span<const double> nodes,
                               const std::function<cplx(double)>& ground) {
  if (n_max < 0) throw ContractViolation("sample family: n_max must be nonnegative");
  const auto rows = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXcd h(rows, n_max + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double x = nodes[static_cast<std::size_t>(i)];
    const cplx shift = 2.0 * x + alpha;
    h(i, 0) = ground(x);
    if (n_max >= 1) h(i, 1) = shift * h(i, 0) / std::sqrt(2.0);
    for (int n = 1; n < n_max; ++n) {
      h(i, n + 1) = (shift * h(i, n) - std::sqrt(2.0 * n) * h(i, n - 1)) / std::sqrt(2.0 * (n + 1));
    }
  }
  return h;
}

}  // namespace

Eigen::MatrixXcd sample_phi_family(const SuperpotentialSystem& system, int n_max,
                                   std::span<const double> nodes) {
  return sample_family(system.alpha(), n_max, nodes,
                       [&system](double x) { return std::exp(-system.w_a(x)); });
}

Eigen::MatrixXcd sample_psi_family(const SuperpotentialSystem& system, int n_max,
                                   std::span<const double> nodes) {
  return sample_family(std::conj(system.alpha()), n_max, nodes,
                       [&system](double x) { return std::exp(-std::conj(system.w_b(x))); });
}

}  // namespace pseudoboson
