#include "quasinv/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace quasinv {

namespace {

void render_term(std::ostringstream &out, Monomial m, const Rational &c) {
  const bool unit = c == Rational(1);
  const bool neg_unit = c == Rational(-1);
  const bool constant = m.z == 0 && m.zb == 0;
  if (constant) {
    out << c.str();
    return;
  }
  bool need_star = false;
  if (unit) {
    // nothing
  } else if (neg_unit) {
    out << '-';
  } else {
    out << c.str();
    need_star = true;
  }
  if (m.z > 0) {
    if (need_star) out << '*';
    out << 'z';
    if (m.z > 1) out << '^' << m.z;
    need_star = true;
  }
  if (m.zb > 0) {
    if (need_star) out << '*';
    out << "zb";
    if (m.zb > 1) out << '^' << m.zb;
  }
}

} // namespace

std::string render_poly(const BiPoly &p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.z > b.first.z;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : terms) {
    if (!first) out << " + ";
    first = false;
    render_term(out, m, c);
  }
  return out.str();
}

std::string render_local(const LocalElement &e) {
  if (e.delta_power() == 0) return render_poly(e.numerator());
  std::ostringstream out;
  out << '(' << render_poly(e.numerator()) << ") / delta^" << e.delta_power();
  return out.str();
}

namespace {

class Parser {
public:
  explicit Parser(const std::string &text) : s_(text) {}

  BiPoly parse() {
    BiPoly p;
    skip_ws();
    bool negate = consume_sign();
    p += parse_term(negate);
    skip_ws();
    while (pos_ < s_.size()) {
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      bool neg = (op == '-');
      if (consume_sign()) neg = !neg;
      p += parse_term(neg);
      skip_ws();
    }
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume_sign() {
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      skip_ws();
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string read_integer() {
    if (!at_digit()) fail("expected digit");
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  int read_exponent() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
    const std::string digits = read_integer();
    if (digits.size() > 6) fail("exponent too large");
    return std::stoi(digits);
  }

  Rational read_rational() {
    const std::string num = read_integer();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      const std::string den = read_integer();
      return Rational(mpz_class(num), mpz_class(den));
    }
    return Rational(mpz_class(num), mpz_class(1));
  }

  // factor := rational | ('z'|'zb') ('^' int)?
  // term   := factor ('*' factor)*
  BiPoly parse_term(bool negate) {
    Rational coeff(negate ? -1 : 1);
    int ez = 0;
    int ezb = 0;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (at_digit()) {
        coeff *= read_rational();
        have_factor = true;
      } else if (pos_ < s_.size() && s_[pos_] == 'z') {
        ++pos_;
        bool bar = (pos_ < s_.size() && s_[pos_] == 'b');
        if (bar) ++pos_;
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
          fail("unknown variable");
        int e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          e = read_exponent();
        }
        (bar ? ezb : ez) += e;
        have_factor = true;
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    return BiPoly::monomial(ez, ezb, coeff);
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

} // namespace

BiPoly parse_poly(const std::string &text) {
  Parser p(text);
  return p.parse();
}

} // namespace quasinv
