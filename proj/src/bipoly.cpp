#include "quasinv/bipoly.hpp"

#include <stdexcept>

namespace quasinv {

BiPoly::BiPoly(const Rational &c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(int z_exp, int zb_exp, const Rational &c) {
  if (z_exp < 0 || zb_exp < 0)
    throw std::invalid_argument("BiPoly: negative exponent");
  BiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Monomial{z_exp, zb_exp}, c);
  return p;
}

std::optional<int> BiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

bool BiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rational BiPoly::coeff(int z_exp, int zb_exp) const {
  auto it = terms_.find(Monomial{z_exp, zb_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(Monomial m, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BiPoly &BiPoly::operator+=(const BiPoly &o) {
  for (const auto &[m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly &BiPoly::operator-=(const BiPoly &o) {
  for (const auto &[m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly &a, const BiPoly &b) {
  BiPoly r;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      r.add_term(Monomial{ma.z + mb.z, ma.zb + mb.zb}, ca * cb);
  return r;
}

BiPoly operator*(const BiPoly &a, const Rational &c) {
  BiPoly r;
  if (c.is_zero()) return r;
  for (const auto &[m, ca] : a.terms_) r.terms_.emplace(m, ca * c);
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

BiPoly BiPoly::derivative(Var v) const {
  BiPoly r;
  for (const auto &[m, c] : terms_) {
    if (v == Var::Z && m.z > 0)
      r.terms_.emplace(Monomial{m.z - 1, m.zb}, c * Rational(m.z));
    else if (v == Var::Zb && m.zb > 0)
      r.terms_.emplace(Monomial{m.z, m.zb - 1}, c * Rational(m.zb));
  }
  return r;
}

BiPoly BiPoly::homogeneous_component(int d) const {
  BiPoly r;
  auto lo = terms_.lower_bound(Monomial{0, d});
  auto hi = terms_.upper_bound(Monomial{d, 0});
  for (auto it = lo; it != hi; ++it) r.terms_.emplace(it->first, it->second);
  return r;
}

std::vector<std::pair<int, BiPoly>> BiPoly::homogeneous_parts() const {
  std::vector<std::pair<int, BiPoly>> out;
  for (const auto &[m, c] : terms_) {
    const int d = m.degree();
    if (out.empty() || out.back().first != d) out.emplace_back(d, BiPoly());
    out.back().second.terms_.emplace(m, c);
  }
  return out;
}

BiPoly BiPoly::conjugate_swap() const {
  BiPoly r;
  for (const auto &[m, c] : terms_) r.terms_.emplace(Monomial{m.zb, m.z}, c);
  return r;
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly &d) const {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  BiPoly q;
  BiPoly r = *this;
  const auto [dm, dc] = *d.terms_.rbegin();
  while (!r.is_zero()) {
    const auto [rm, rc] = *r.terms_.rbegin();
    if (rm.z < dm.z || rm.zb < dm.zb) return std::nullopt;
    const BiPoly t = monomial(rm.z - dm.z, rm.zb - dm.zb, rc / dc);
    q += t;
    r -= t * d;
  }
  return q;
}

} // namespace quasinv
