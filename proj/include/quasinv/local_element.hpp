#pragma once

#include "quasinv/bipoly.hpp"

namespace quasinv {

/// delta = z^N - zb^N, the complex form of the mirror-line product (up to a
/// constant). Its powers are the only denominators operator application can
/// produce over a dihedral configuration.
BiPoly delta_poly(int n_mirrors);

/// Element of the localized ring S[delta^-1]: numerator / delta^delta_power.
/// Always reduced: delta_power == 0 or delta does not divide the numerator.
class LocalElement {
public:
  /// Reduces on construction (divides numerator by delta while possible).
  LocalElement(BiPoly numerator, int delta_power, int n_mirrors);
  static LocalElement from_poly(BiPoly p, int n_mirrors) {
    return LocalElement(std::move(p), 0, n_mirrors);
  }

  const BiPoly &numerator() const { return num_; }
  int delta_power() const { return k_; }
  int config_n() const { return n_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return k_ == 0; }

  /// Total degree (numerator degree minus k*N); nullopt for zero.
  std::optional<int> degree() const;

  LocalElement operator-() const;
  friend LocalElement operator+(const LocalElement &a, const LocalElement &b);
  friend LocalElement operator-(const LocalElement &a, const LocalElement &b);
  friend LocalElement operator*(const LocalElement &a, const LocalElement &b);
  friend LocalElement operator*(const LocalElement &a, const BiPoly &p);
  friend LocalElement operator*(const LocalElement &a, const Rational &c);
  friend bool operator==(const LocalElement &a, const LocalElement &b);

  /// Quotient-rule partial derivative, reduced.
  LocalElement derivative(Var v) const;

  /// Division by one power of delta.
  LocalElement div_delta() const { return LocalElement(num_, k_ + 1, n_); }

  /// Bar involution; delta is antisymmetric, so the sign is (-1)^delta_power.
  LocalElement conjugate_swap() const;

  /// Constant term when the element is a polynomial; nullopt signals a pole
  /// at the origin (a theorem-violation sentinel for callers that expected a
  /// polynomial value).
  std::optional<Rational> eval_origin() const;

private:
  BiPoly num_;
  int k_;
  int n_;
};

} // namespace quasinv
