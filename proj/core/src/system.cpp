#include "pseudoboson/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pseudoboson/errors.hpp"

namespace pseudoboson {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::Gaussian: return "gaussian";
    case Family::CosinePerturbed: return "cosine_perturbed";
    case Family::BoundedPhi: return "bounded_phi";
    case Family::ShiftedOscillator: return "shifted_oscillator";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) noexcept {
  if (name == "gaussian") return Family::Gaussian;
  if (name == "cosine_perturbed" || name == "cosine") return Family::CosinePerturbed;
  if (name == "bounded_phi") return Family::BoundedPhi;
  if (name == "shifted_oscillator") return Family::ShiftedOscillator;
  return std::nullopt;
}

BoundedFunction tanh_phi() {
  return {"tanh", [](double x) { return std::tanh(x); },
          [](double x) {
            const double c = std::cosh(x);
            return 1.0 / (c * c);
          },
          -1.0, 1.0};
}

BoundedFunction arctan_phi() {
  return {"arctan", [](double x) { return std::atan(x); },
          [](double x) { return 1.0 / (1.0 + x * x); }, -kPi / 2, kPi / 2};
}

std::optional<BoundedFunction> bounded_function_from_string(std::string_view name) {
  if (name == "tanh") return tanh_phi();
  if (name == "arctan") return arctan_phi();
  return std::nullopt;
}

SuperpotentialSystem::SuperpotentialSystem(Family family, cplx alpha, cplx beta, Callable W_a,
                                           Callable w_a, std::optional<BoundedFunction> phi)
    : family_(family),
      alpha_(alpha),
      beta_(beta),
      W_a_(std::move(W_a)),
      w_a_(std::move(w_a)),
      phi_(std::move(phi)) {}

bool SuperpotentialSystem::is_complex() const noexcept {
  return alpha_.imag() != 0.0 || beta_.imag() != 0.0;
}

std::string SuperpotentialSystem::describe() const {
  std::ostringstream os;
  os << to_string(family_) << "(alpha=" << alpha_.real() << (alpha_.imag() < 0 ? "-" : "+")
     << std::abs(alpha_.imag()) << "i";
  if (beta_ != cplx{}) os << ", beta=" << beta_.real() << (beta_.imag() < 0 ? "-" : "+")
                          << std::abs(beta_.imag()) << "i";
  if (phi_) os << ", phi=" << phi_->name;
  os << ")";
  return os.str();
}

namespace {

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void check_bounds(const BoundedFunction& phi) {
  if (!phi.value || !phi.derivative) throw ParameterError("bounded_phi: Phi and Phi' are required");
  if (!(phi.lower <= phi.upper)) throw ParameterError("bounded_phi: lower bound exceeds upper bound");
  constexpr int kSamples = 4001;
  constexpr double kHalfWidth = 40.0;
  for (int i = 0; i < kSamples; ++i) {
    const double x = -kHalfWidth + 2.0 * kHalfWidth * i / (kSamples - 1);
    const double v = phi.value(x);
    if (!std::isfinite(v) || v < phi.lower || v > phi.upper) {
      std::ostringstream os;
      os << "bounded_phi: Phi(" << x << ") = " << v << " leaves the declared bounds [" << phi.lower
         << ", " << phi.upper << "]";
      throw ParameterError(os.str());
    }
  }
}

}  // namespace

SystemPtr make_system(Family family, cplx alpha, const FamilyParams& params) {
  if (!finite(alpha)) throw ParameterError("alpha must be finite");
  if (!finite(params.beta)) throw ParameterError("beta must be finite");

  using Callable = SuperpotentialSystem::Callable;
  Callable W_a;
  Callable w_a;
  std::optional<BoundedFunction> phi;

  switch (family) {
    case Family::Gaussian:
      W_a = [](double x) { return cplx(x, 0.0); };
      w_a = [](double x) { return cplx(0.5 * x * x, 0.0); };
      break;
    case Family::CosinePerturbed:
      W_a = [](double x) { return cplx(x + std::cos(x), 0.0); };
      w_a = [](double x) { return cplx(0.5 * x * x + std::sin(x), 0.0); };
      break;
    case Family::BoundedPhi: {
      if (!params.phi) throw ParameterError("bounded_phi: a bounded function Phi is required");
      check_bounds(*params.phi);
      phi = params.phi;
      const auto value = phi->value;
      const auto derivative = phi->derivative;
      const double phi0 = value(0.0);
      W_a = [derivative](double x) { return cplx(x + derivative(x), 0.0); };
      w_a = [value, phi0](double x) { return cplx(0.5 * x * x + value(x) - phi0, 0.0); };
      break;
    }
    case Family::ShiftedOscillator:
      W_a = [alpha](double x) { return cplx(x, 0.0) + 0.5 * alpha; };
      w_a = [alpha](double x) { return cplx(0.5 * x * x, 0.0) + 0.5 * alpha * x; };
      break;
  }
  return std::make_shared<const SuperpotentialSystem>(family, alpha, params.beta, std::move(W_a),
                                                      std::move(w_a), std::move(phi));
}

ConstraintResiduals constraint_residuals(const SuperpotentialSystem& system, double half_width,
                                         int points) {
  if (points < 2) throw ContractViolation("constraint_residuals: need at least two points");
  constexpr double h = 1e-5;
  ConstraintResiduals r;
  const cplx alpha = system.alpha();
  for (int i = 0; i < points; ++i) {
    const double x = -half_width + 2.0 * half_width * i / (points - 1);
    r.superpotential_sum =
        std::max(r.superpotential_sum, std::abs(system.W_a(x) + system.W_b(x) - (2.0 * x + alpha)));
    r.antiderivative_sum = std::max(
        r.antiderivative_sum,
        std::abs(system.w_a(x) + system.w_b(x) - (x * x + alpha * x + system.beta())));
    for (Side side : {Side::A, Side::B}) {
      const cplx fd = (system.w(side, x + h) - system.w(side, x - h)) / (2.0 * h);
      r.derivative_mismatch = std::max(r.derivative_mismatch, std::abs(fd - system.W(side, x)));
    }
  }
  return r;
}

DecayCertificate decay_certificate(const SuperpotentialSystem& system, Side side, double L) {
  if (!(L >= 5.0)) throw ContractViolation("decay_certificate: L must be at least 5");
  constexpr int kPointsPerUnit = 200;
  const int n = static_cast<int>(std::ceil(2.0 * L * kPointsPerUnit)) + 1;

  // |e^{-w}| e^{|x|} = exp(|x| - Re w)
  double best_log = -std::numeric_limits<double>::infinity();
  int best = 0;
  std::vector<double> logs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = -L + 2.0 * L * i / (n - 1);
    logs[static_cast<std::size_t>(i)] = std::abs(x) - system.w(side, x).real();
    if (logs[static_cast<std::size_t>(i)] > best_log) {
      best_log = logs[static_cast<std::size_t>(i)];
      best = i;
    }
  }
  const char* label = side == Side::A ? "a" : "b";
  if (best == 0 || best == n - 1) {
    throw DecayNotEstablished(std::string("decay_certificate: supremum on side ") + label +
                              " sits at the boundary of [-L, L]");
  }
  const double margin = std::log(2.0);
  if (logs.front() > best_log - margin || logs.back() > best_log - margin) {
    throw DecayNotEstablished(std::string("decay_certificate: side ") + label +
                              " endpoint values are within a factor 2 of the supremum");
  }
  DecayCertificate cert;
  cert.side = side;
  cert.C = std::exp(best_log);
  cert.delta = 1.0;
  cert.lower = -L;
  cert.upper = L;
  cert.argmax = -L + 2.0 * L * best / (n - 1);
  return cert;
}

}  // namespace pseudoboson
