#include "quasinv/calogero.hpp"

#include "quasinv/poly_io.hpp"

#include <gmpxx.h>

namespace quasinv {

LocalElement apply_L(const DihedralConfig &cfg, const LocalElement &e) {
  if (e.config_n() != cfg.N)
    throw std::invalid_argument("apply_L: configuration mismatch");
  const LocalElement dzb = e.derivative(Var::Zb);
  LocalElement out = dzb.derivative(Var::Z) * Rational(4);
  if (cfg.m == 0) return out;
  const LocalElement dz = e.derivative(Var::Z);
  const LocalElement mirror = dz * BiPoly::monomial(0, cfg.N - 1) -
                              dzb * BiPoly::monomial(cfg.N - 1, 0);
  out = out + (mirror * Rational(4L * cfg.m * cfg.N)).div_delta();
  return out;
}

LocalElement apply_L(const DihedralConfig &cfg, const BiPoly &p) {
  return apply_L(cfg, LocalElement::from_poly(p, cfg.N));
}

LocalElement apply_integral(const DihedralConfig &cfg, const BiPoly &q,
                            const LocalElement &p) {
  if (p.config_n() != cfg.N)
    throw std::invalid_argument("apply_integral: configuration mismatch");
  if (!q.is_homogeneous())
    throw std::invalid_argument("apply_integral: symbol must be homogeneous");
  if (!is_quasiinvariant(cfg, q))
    throw std::invalid_argument("apply_integral: symbol is not quasiinvariant");
  const int d = q.degree().value_or(0);
  if (d == 0) return p * q.coeff(0, 0);

  LocalElement acc(BiPoly(), 0, cfg.N);
  LocalElement power = p; // L^i(p)
  for (int i = 0; i <= d; ++i) {
    if (i > 0) {
      power = apply_L(cfg, power);
      // Every remaining term contains a higher power of L applied to p.
      if (power.is_zero()) break;
    }
    LocalElement term = power * q;
    for (int r = 0; r < d - i; ++r) {
      term = apply_L(cfg, term);
      if (term.is_zero()) break;
    }
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                 static_cast<unsigned long>(i));
    if (i % 2 != 0) binom = -binom;
    acc = acc + term * Rational(binom, mpz_class(1));
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
  mpz_class two_d;
  mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(d));
  return acc * Rational(mpz_class(1), two_d * fact);
}

LocalElement apply_L2(const DihedralConfig &cfg, const LocalElement &p) {
  const BiPoly sigma2 = invariant_generators(cfg).second;
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(cfg.N));
  return apply_integral(cfg, sigma2, p) * Rational(mpz_class(1), two_n);
}

OperatorHandle::OperatorHandle(DihedralConfig config, BiPoly sym)
    : cfg(config), symbol(std::move(sym)), degree(symbol.degree().value_or(0)) {
  if (!symbol.is_homogeneous())
    throw std::invalid_argument("OperatorHandle: symbol must be homogeneous");
  if (!is_quasiinvariant(cfg, symbol))
    throw std::invalid_argument("OperatorHandle: symbol is not quasiinvariant");
}

Rational discriminant_pairing_closed(const DihedralConfig &cfg) {
  const int M = cfg.top_degree();
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(cfg.N),
                static_cast<unsigned long>(2 * cfg.m + 1));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2,
                static_cast<unsigned long>((2 * cfg.m + 1) * (cfg.N - 1)));
  Rational out(num, den);
  for (int j = 1; j <= 2 * cfg.m + 1; ++j) out *= Rational(2 * j - 2 * cfg.m - 1);
  for (int d = 1; d <= M; ++d)
    if (d % cfg.N != 0) out *= Rational(d - cfg.m * cfg.N);
  return out;
}

Rational discriminant_pairing(const DihedralConfig &cfg) {
  const int M = cfg.top_degree();
  const BiPoly w = m_discriminant(cfg);
  LocalElement t = LocalElement::from_poly(w * w, cfg.N);
  for (int i = 0; i < M; ++i) t = apply_L(cfg, t);
  if (!t.is_polynomial())
    throw TheoremViolation("pairing constant: L^M(q_N^2) left the polynomial ring");
  const auto deg = t.degree();
  if (deg && *deg != 0)
    throw TheoremViolation("pairing constant: L^M(q_N^2) is not constant");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(M));
  mpz_class two_m;
  mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(M));
  return t.numerator().coeff(0, 0) * Rational(mpz_class(1), two_m * fact);
}

Rational discriminant_pairing_direct(const DihedralConfig &cfg) {
  // q_N = c w with c = (2i)^(2m+1) 2^((N-1)(2m+1)) for the unit-normal w, so
  // L_{q_N}(q_N) = c^2 L_w(w) with c^2 = -4^(N(2m+1)).
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4,
                static_cast<unsigned long>(cfg.N * (2 * cfg.m + 1)));
  return discriminant_pairing(cfg) / Rational(-four_pow, mpz_class(1));
}

} // namespace quasinv
