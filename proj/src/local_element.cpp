#include "quasinv/local_element.hpp"

#include <stdexcept>
#include <utility>

namespace quasinv {

BiPoly delta_poly(int n_mirrors) {
  return BiPoly::monomial(n_mirrors, 0) - BiPoly::monomial(0, n_mirrors);
}

LocalElement::LocalElement(BiPoly numerator, int delta_power, int n_mirrors)
    : num_(std::move(numerator)), k_(delta_power), n_(n_mirrors) {
  if (k_ < 0) throw std::invalid_argument("LocalElement: negative delta power");
  if (n_ < 2) throw std::invalid_argument("LocalElement: N must be >= 2");
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  const BiPoly delta = delta_poly(n_);
  while (k_ > 0) {
    auto q = num_.divide_exact(delta);
    if (!q) break;
    num_ = std::move(*q);
    --k_;
  }
}

std::optional<int> LocalElement::degree() const {
  auto d = num_.degree();
  if (!d) return std::nullopt;
  return *d - k_ * n_;
}

LocalElement LocalElement::operator-() const { return LocalElement(-num_, k_, n_); }

LocalElement operator+(const LocalElement &a, const LocalElement &b) {
  if (a.n_ != b.n_) throw std::invalid_argument("LocalElement: mixed configurations");
  const BiPoly delta = delta_poly(a.n_);
  const int k = std::max(a.k_, b.k_);
  BiPoly num = a.num_ * delta.pow(static_cast<unsigned>(k - a.k_)) +
               b.num_ * delta.pow(static_cast<unsigned>(k - b.k_));
  return LocalElement(std::move(num), k, a.n_);
}

LocalElement operator-(const LocalElement &a, const LocalElement &b) { return a + (-b); }

LocalElement operator*(const LocalElement &a, const LocalElement &b) {
  if (a.n_ != b.n_) throw std::invalid_argument("LocalElement: mixed configurations");
  return LocalElement(a.num_ * b.num_, a.k_ + b.k_, a.n_);
}

LocalElement operator*(const LocalElement &a, const BiPoly &p) {
  return LocalElement(a.num_ * p, a.k_, a.n_);
}

LocalElement operator*(const LocalElement &a, const Rational &c) {
  return LocalElement(a.num_ * c, c.is_zero() ? 0 : a.k_, a.n_);
}

bool operator==(const LocalElement &a, const LocalElement &b) {
  return a.n_ == b.n_ && a.k_ == b.k_ && a.num_ == b.num_;
}

LocalElement LocalElement::derivative(Var v) const {
  if (k_ == 0) return LocalElement(num_.derivative(v), 0, n_);
  // d/dv (num * delta^-k) = (num' * delta - k * num * delta') / delta^(k+1)
  const BiPoly ddelta = (v == Var::Z)
                            ? BiPoly::monomial(n_ - 1, 0, Rational(n_))
                            : BiPoly::monomial(0, n_ - 1, Rational(-n_));
  BiPoly num = num_.derivative(v) * delta_poly(n_) - num_ * ddelta * Rational(k_);
  return LocalElement(std::move(num), k_ + 1, n_);
}

LocalElement LocalElement::conjugate_swap() const {
  BiPoly num = num_.conjugate_swap();
  if (k_ % 2 != 0) num = -num;
  return LocalElement(std::move(num), k_, n_);
}

std::optional<Rational> LocalElement::eval_origin() const {
  if (k_ != 0) return std::nullopt;
  return num_.coeff(0, 0);
}

} // namespace quasinv
