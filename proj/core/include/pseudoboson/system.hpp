#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "pseudoboson/types.hpp"

namespace pseudoboson {

/// Built-in superpotential families.
///
///  - Gaussian:          W_a(x) = x
///  - CosinePerturbed:   W_a(x) = x + cos(x)
///  - BoundedPhi:        W_a(x) = x + Phi'(x) with Phi bounded on the real line
///  - ShiftedOscillator: W_a(x) = x + alpha/2, so that W_a = W_b
enum class Family { Gaussian, CosinePerturbed, BoundedPhi, ShiftedOscillator };

std::string_view to_string(Family family) noexcept;
std::optional<Family> family_from_string(std::string_view name) noexcept;

/// Which of the two superpotentials a quantity refers to.
enum class Side { A, B };

/// A differentiable real function with declared bounds lower <= f <= upper.
struct BoundedFunction {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double lower = 0.0;
  double upper = 0.0;
};

BoundedFunction tanh_phi();
BoundedFunction arctan_phi();
/// Looks up a built-in bounded function by name ("tanh", "arctan").
std::optional<BoundedFunction> bounded_function_from_string(std::string_view name);

struct FamilyParams {
  /// Required for Family::BoundedPhi, ignored otherwise.
  std::optional<BoundedFunction> phi;
  /// Second integration constant, w_a + w_b = x^2 + alpha x + beta.
  cplx beta{0.0, 0.0};
};

/// A pair of superpotentials with W_a + W_b = 2x + alpha.
///
/// Antiderivatives follow the convention w_a(0) = 0, so that w_b(0) = beta.
/// Instances are immutable; share them through SystemPtr.
class SuperpotentialSystem {
 public:
  using Callable = std::function<cplx(double)>;

  SuperpotentialSystem(Family family, cplx alpha, cplx beta, Callable W_a, Callable w_a,
                       std::optional<BoundedFunction> phi);

  Family family() const noexcept { return family_; }
  cplx alpha() const noexcept { return alpha_; }
  cplx beta() const noexcept { return beta_; }
  const std::optional<BoundedFunction>& phi() const noexcept { return phi_; }

  cplx W_a(double x) const { return W_a_(x); }
  cplx W_b(double x) const { return cplx(2.0 * x, 0.0) + alpha_ - W_a_(x); }
  cplx w_a(double x) const { return w_a_(x); }
  cplx w_b(double x) const { return cplx(x * x, 0.0) + alpha_ * x + beta_ - w_a_(x); }
  cplx W(Side side, double x) const { return side == Side::A ? W_a(x) : W_b(x); }
  cplx w(Side side, double x) const { return side == Side::A ? w_a(x) : w_b(x); }

  /// True when the superpotentials take non-real values, in which case the
  /// S operator carries a complex conjugation.
  bool is_complex() const noexcept;

  std::string describe() const;

 private:
  Family family_;
  cplx alpha_;
  cplx beta_;
  Callable W_a_;
  Callable w_a_;
  std::optional<BoundedFunction> phi_;
};

using SystemPtr = std::shared_ptr<const SuperpotentialSystem>;

/// Builds one of the built-in families. Throws ParameterError for a
/// non-finite alpha or beta, a missing Phi, or a Phi that leaves its declared
/// bounds on the sampling grid.
SystemPtr make_system(Family family, cplx alpha, const FamilyParams& params = {});

struct ConstraintResiduals {
  double superpotential_sum = 0.0;  ///< max |W_a + W_b - (2x + alpha)|
  double antiderivative_sum = 0.0;  ///< max |w_a + w_b - (x^2 + alpha x + beta)|
  double derivative_mismatch = 0.0; ///< max |w_j' - W_j| by central differences
};

ConstraintResiduals constraint_residuals(const SuperpotentialSystem& system,
                                         double half_width = 20.0, int points = 1001);

/// |exp(-w_side(x))| <= C exp(-delta |x|) on [lower, upper].
struct DecayCertificate {
  Side side = Side::A;
  double C = 0.0;
  double delta = 1.0;
  double lower = 0.0;
  double upper = 0.0;
  double argmax = 0.0;
};

/// Grid supremum of |exp(-w(x))| e^{|x|} on [-L, L]. This is a sufficient-
/// condition check for completeness of the x^n exp(-w) family, not a proof.
/// Throws DecayNotEstablished when the supremum sits at an endpoint or the
/// endpoint values are not at least a factor of two below it.
DecayCertificate decay_certificate(const SuperpotentialSystem& system, Side side, double L);

}  // namespace pseudoboson
