#include "pseudoboson/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "pseudoboson/errors.hpp"

namespace pseudoboson {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(cplx c) { return Polynomial({c}); }

Polynomial Polynomial::linear(cplx c0, cplx c1) { return Polynomial({c0, c1}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrimThreshold) coeffs_.pop_back();
}

cplx Polynomial::operator()(cplx x) const noexcept {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::conj() const {
  std::vector<cplx> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](cplx v) { return std::conj(v); });
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<cplx> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

cplx poly_eval(const Polynomial& p, cplx x) { return p(x); }

Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

std::vector<Polynomial> build_pn_family(cplx alpha, int n_max) {
  if (n_max < 0) throw ContractViolation("build_pn_family: n_max must be nonnegative");
  const Polynomial shift = Polynomial::linear(alpha, 2.0);
  std::vector<Polynomial> family;
  family.reserve(static_cast<std::size_t>(n_max) + 1);
  family.push_back(Polynomial::constant(1.0));
  for (int n = 0; n < n_max; ++n) {
    const Polynomial& p = family.back();
    family.push_back(shift * p - p.derivative());
  }
  return family;
}

Polynomial pn_rodrigues(cplx alpha, int n) {
  if (n < 0) throw ContractViolation("pn_rodrigues: n must be nonnegative");
  // d^k/dx^k exp(-(x^2 + alpha x)) = q_k(x) exp(-(x^2 + alpha x))
  const Polynomial shift = Polynomial::linear(alpha, 2.0);
  Polynomial q = Polynomial::constant(1.0);
  for (int k = 0; k < n; ++k) q = q.derivative() - shift * q;
  return (n % 2 == 0) ? q : q * cplx(-1.0);
}

double max_abs_coeff_diff(const Polynomial& p, const Polynomial& q) {
  const std::size_t len = std::max(p.coeffs().size(), q.coeffs().size());
  double worst = 0.0;
  for (std::size_t k = 0; k < len; ++k) worst = std::max(worst, std::abs(p.coeff(k) - q.coeff(k)));
  return worst;
}

double max_relative_coeff_diff(const Polynomial& p, const Polynomial& q) {
  const std::size_t len = std::max(p.coeffs().size(), q.coeffs().size());
  double scale = 0.0;
  for (std::size_t k = 0; k < len; ++k)
    scale = std::max({scale, std::abs(p.coeff(k)), std::abs(q.coeff(k))});
  if (scale == 0.0) return 0.0;
  return max_abs_coeff_diff(p, q) / scale;
}

}  // namespace pseudoboson
