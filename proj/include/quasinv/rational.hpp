#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace quasinv {

/// Exact rational number over GMP. Always canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {} // NOLINT: implicit, coefficient literals read as math
  Rational(long num, long den);
  Rational(const mpz_class &num, const mpz_class &den);
  explicit Rational(const mpq_class &q);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
  static Rational from_string(const std::string &s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

  /// "p/q" for non-integers, plain "p" otherwise.
  std::string str() const { return v_.get_str(); }

private:
  mpq_class v_;
};

Rational rational_pow(const Rational &base, unsigned exp);

} // namespace quasinv
