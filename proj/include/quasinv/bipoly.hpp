#pragma once

#include "quasinv/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace quasinv {

/// Formal variables of the complex-coordinate ring: z and its formal
/// conjugate zb. Coefficients are rational, so the bar involution acts on
/// exponents only (see BiPoly::conjugate_swap).
enum class Var { Z, Zb };

struct Monomial {
  int z = 0;
  int zb = 0;
  int degree() const { return z + zb; }
  friend bool operator==(Monomial a, Monomial b) = default;
};

/// Graded order: total degree first, then z-exponent. The maximum element is
/// the leading term used by divide_exact.
struct GradedLess {
  bool operator()(Monomial a, Monomial b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.z < b.z;
  }
};

/// Sparse bivariate polynomial in z, zb over the rationals. Stored
/// coefficients are never zero; equality is structural.
class BiPoly {
public:
  using TermMap = std::map<Monomial, Rational, GradedLess>;

  BiPoly() = default;
  BiPoly(const Rational &c); // NOLINT: constants convert implicitly
  BiPoly(long c) : BiPoly(Rational(c)) {}

  static BiPoly monomial(int z_exp, int zb_exp, const Rational &c = Rational(1));
  static BiPoly var_z() { return monomial(1, 0); }
  static BiPoly var_zb() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  const TermMap &terms() const { return terms_; }
  Rational coeff(int z_exp, int zb_exp) const;
  std::size_t term_count() const { return terms_.size(); }

  BiPoly operator-() const;
  BiPoly &operator+=(const BiPoly &o);
  BiPoly &operator-=(const BiPoly &o);
  friend BiPoly operator+(BiPoly a, const BiPoly &b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly &b) { return a -= b; }
  friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
  friend BiPoly operator*(const BiPoly &a, const Rational &c);
  friend BiPoly operator*(const Rational &c, const BiPoly &a) { return a * c; }
  friend bool operator==(const BiPoly &a, const BiPoly &b) { return a.terms_ == b.terms_; }

  BiPoly pow(unsigned e) const;

  /// Formal partial derivative; drops homogeneous degree by exactly one.
  BiPoly derivative(Var v) const;

  /// Sum of the terms of total degree d.
  BiPoly homogeneous_component(int d) const;

  /// Splits into (degree, component) pairs, ascending, zero components skipped.
  std::vector<std::pair<int, BiPoly>> homogeneous_parts() const;

  /// The bar involution z <-> zb (an exponent swap; rational coefficients are
  /// fixed by conjugation).
  BiPoly conjugate_swap() const;

  /// Exact division: returns q with *this == q * d, or nullopt when no such
  /// polynomial exists. Iterated leading-term elimination in the graded,
  /// z-major order. Used as a divisibility test throughout.
  std::optional<BiPoly> divide_exact(const BiPoly &d) const;

private:
  void add_term(Monomial m, const Rational &c);
  TermMap terms_;
};

} // namespace quasinv
