#include "quasinv/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace quasinv {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Rational> mat_vec(const RatMatrix &m, const std::vector<Rational> &v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    Rational acc(0);
    for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

/// Clears each row to integers by its denominator lcm; returns per-row
/// multipliers (row scaling preserves rank and nullspace; determinant is
/// rescaled by the caller).
std::vector<mpz_class> clear_rows(const RatMatrix &m, ZMatrix &out) {
  out.assign(static_cast<std::size_t>(m.rows), std::vector<mpz_class>(m.cols));
  std::vector<mpz_class> scale(static_cast<std::size_t>(m.rows), 1);
  for (int i = 0; i < m.rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols; ++j) {
      mpz_class d = m.at(i, j).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (int j = 0; j < m.cols; ++j) {
      const Rational &e = m.at(i, j);
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          e.num() * (l / e.den());
    }
    scale[static_cast<std::size_t>(i)] = l;
  }
  return scale;
}

struct Echelon {
  ZMatrix m;                   // fraction-free row echelon form
  std::vector<int> pivot_cols; // ascending
  int sign = 1;                // row swap parity
};

/// Fraction-free Gaussian elimination (Bareiss): exact divisions by the
/// previous pivot bound entry growth. Pivot = first nonzero entry scanning
/// rows top-down within each column.
Echelon bareiss(ZMatrix m) {
  Echelon e;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  mpz_class prev_pivot = 1;
  int pr = 0;
  for (int col = 0; col < cols && pr < rows; ++col) {
    int sel = -1;
    for (int r = pr; r < rows; ++r) {
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pr) {
      std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(pr)]);
      e.sign = -e.sign;
    }
    auto &prow = m[static_cast<std::size_t>(pr)];
    for (int r = pr + 1; r < rows; ++r) {
      auto &row = m[static_cast<std::size_t>(r)];
      const mpz_class head = row[static_cast<std::size_t>(col)];
      for (int j = col + 1; j < cols; ++j) {
        mpz_class v = prow[static_cast<std::size_t>(col)] * row[static_cast<std::size_t>(j)] -
                      head * prow[static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        row[static_cast<std::size_t>(j)] = v;
      }
      row[static_cast<std::size_t>(col)] = 0;
    }
    prev_pivot = prow[static_cast<std::size_t>(col)];
    e.pivot_cols.push_back(col);
    ++pr;
  }
  e.m = std::move(m);
  return e;
}

} // namespace

int rank(const RatMatrix &m) {
  ZMatrix z;
  clear_rows(m, z);
  return static_cast<int>(bareiss(std::move(z)).pivot_cols.size());
}

Rational determinant(const RatMatrix &m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: non-square matrix");
  if (m.rows == 0) return Rational(1);
  ZMatrix z;
  const std::vector<mpz_class> scale = clear_rows(m, z);
  const Echelon e = bareiss(std::move(z));
  if (static_cast<int>(e.pivot_cols.size()) < m.rows) return Rational(0);
  const std::size_t last = static_cast<std::size_t>(m.rows - 1);
  mpz_class det_int = e.m[last][static_cast<std::size_t>(e.pivot_cols.back())];
  if (e.sign < 0) det_int = -det_int;
  mpz_class den = 1;
  for (const mpz_class &s : scale) den *= s;
  return Rational(det_int, den);
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix &m) {
  ZMatrix z;
  clear_rows(m, z);
  const Echelon e = bareiss(std::move(z));
  const int cols = m.cols;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(f)] = Rational(1);
    // Back-substitute through the pivot rows (bottom-up).
    for (int i = static_cast<int>(e.pivot_cols.size()) - 1; i >= 0; --i) {
      const int pc = e.pivot_cols[static_cast<std::size_t>(i)];
      const auto &row = e.m[static_cast<std::size_t>(i)];
      Rational acc(0);
      for (int j = pc + 1; j < cols; ++j)
        if (!v[static_cast<std::size_t>(j)].is_zero() && row[static_cast<std::size_t>(j)] != 0)
          acc += Rational(row[static_cast<std::size_t>(j)], mpz_class(1)) * v[static_cast<std::size_t>(j)];
      v[static_cast<std::size_t>(pc)] =
          -acc / Rational(row[static_cast<std::size_t>(pc)], mpz_class(1));
    }
    // Normalize: first nonzero entry 1.
    for (const Rational &x : v) {
      if (!x.is_zero()) {
        const Rational inv = Rational(1) / x;
        for (Rational &y : v) y *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RatMatrix &a, const std::vector<Rational> &b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw std::invalid_argument("solve: size mismatch");
  RatMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[static_cast<std::size_t>(i)];
  }
  ZMatrix z;
  clear_rows(aug, z);
  const Echelon e = bareiss(std::move(z));
  // Inconsistent iff some pivot lands in the augmented column.
  for (int c : e.pivot_cols)
    if (c == a.cols) return std::nullopt;

  std::vector<Rational> x(static_cast<std::size_t>(a.cols), Rational(0));
  for (int i = static_cast<int>(e.pivot_cols.size()) - 1; i >= 0; --i) {
    const int pc = e.pivot_cols[static_cast<std::size_t>(i)];
    const auto &row = e.m[static_cast<std::size_t>(i)];
    Rational acc = Rational(row[static_cast<std::size_t>(a.cols)], mpz_class(1));
    for (int j = pc + 1; j < a.cols; ++j)
      if (!x[static_cast<std::size_t>(j)].is_zero() && row[static_cast<std::size_t>(j)] != 0)
        acc -= Rational(row[static_cast<std::size_t>(j)], mpz_class(1)) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(pc)] = acc / Rational(row[static_cast<std::size_t>(pc)], mpz_class(1));
  }
  return x;
}

int span_rank(const std::vector<std::vector<Rational>> &vectors) {
  if (vectors.empty()) return 0;
  RatMatrix m(static_cast<int>(vectors.size()), static_cast<int>(vectors[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return rank(m);
}

bool in_span(const std::vector<std::vector<Rational>> &family, const std::vector<Rational> &v) {
  bool v_zero = true;
  for (const Rational &x : v)
    if (!x.is_zero()) {
      v_zero = false;
      break;
    }
  if (v_zero) return true;
  if (family.empty()) return false;
  auto extended = family;
  extended.push_back(v);
  return span_rank(extended) == span_rank(family);
}

} // namespace quasinv
