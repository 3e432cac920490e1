#include "quasinv/rational.hpp"

#include <stdexcept>

namespace quasinv {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class &q) : v_(q) { v_.canonicalize(); }

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string &s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (sgn(q.get_den()) <= 0)
    throw std::invalid_argument("Rational: nonpositive denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational rational_pow(const Rational &base, unsigned exp) {
  Rational r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

} // namespace quasinv
