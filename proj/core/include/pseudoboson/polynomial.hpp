#pragma once

#include <span>
#include <vector>

#include "pseudoboson/types.hpp"

namespace pseudoboson {

/// Coefficients with magnitude at or below this are treated as zero when
/// trimming the leading end of a polynomial.
inline constexpr double kTrimThreshold = 1e-14;

/// Dense polynomial with complex coefficients, stored in ascending powers.
///
/// The representation is kept trimmed: the leading coefficient is nonzero
/// unless the polynomial is identically zero, in which case the coefficient
/// list is empty and degree() is -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs);

  static Polynomial constant(cplx c);
  /// c0 + c1 x
  static Polynomial linear(cplx c0, cplx c1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  cplx coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : cplx{};
  }
  cplx leading() const noexcept { return is_zero() ? cplx{} : coeffs_.back(); }

  /// Horner evaluation.
  cplx operator()(cplx x) const noexcept;

  Polynomial derivative() const;
  /// Conjugates every coefficient.
  Polynomial conj() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(cplx s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, cplx s) { return p *= s; }
  friend Polynomial operator*(cplx s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

 private:
  void trim();

  std::vector<cplx> coeffs_;
};

cplx poly_eval(const Polynomial& p, cplx x);
Polynomial poly_derivative(const Polynomial& p);

/// Returns p_0..p_{n_max} with p_0 = 1 and p_{n+1} = (2x + alpha) p_n - p_n'.
std::vector<Polynomial> build_pn_family(cplx alpha, int n_max);

/// Builds p_n from the Rodrigues-type formula
///   p_n(x) = (-1)^n exp(x^2 + alpha x) d^n/dx^n exp(-(x^2 + alpha x)),
/// by differentiating the polynomial prefactor q_k symbolically.
Polynomial pn_rodrigues(cplx alpha, int n);

/// max_k |p_k - q_k| / max_k max(|p_k|, |q_k|); zero when both are zero.
double max_relative_coeff_diff(const Polynomial& p, const Polynomial& q);

/// max_k |p_k - q_k|.
double max_abs_coeff_diff(const Polynomial& p, const Polynomial& q);

}  // namespace pseudoboson
