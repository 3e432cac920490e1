#include "quasinv/dihedral.hpp"

#include "quasinv/local_element.hpp"
#include "quasinv/poly_io.hpp"

#include <gmpxx.h>

namespace quasinv {

std::pair<BiPoly, BiPoly> invariant_generators(const DihedralConfig &cfg) {
  return {BiPoly::monomial(1, 1),
          BiPoly::monomial(cfg.N, 0) + BiPoly::monomial(0, cfg.N)};
}

BiPoly m_discriminant(const DihedralConfig &cfg) {
  return delta_poly(cfg.N).pow(static_cast<unsigned>(2 * cfg.m + 1));
}

namespace {

mpz_class odd_power(long base, int s) {
  mpz_class b(base);
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(2 * s - 1));
  return r;
}

} // namespace

RatMatrix quasi_condition_matrix(const DihedralConfig &cfg, int d) {
  if (d < 0) throw std::invalid_argument("quasi_condition_matrix: negative degree");
  RatMatrix m(cfg.N * cfg.m, d + 1);
  for (int j = 0; j < cfg.N; ++j)
    for (int s = 1; s <= cfg.m; ++s) {
      const int row = j * cfg.m + (s - 1);
      for (int b = j; b <= d; b += cfg.N)
        m.at(row, b) = Rational(odd_power(d - 2L * b, s), mpz_class(1));
    }
  return m;
}

namespace {

std::vector<Rational> coeff_vector(const BiPoly &p, int d) {
  std::vector<Rational> v(static_cast<std::size_t>(d + 1));
  for (const auto &[mono, c] : p.terms()) v[static_cast<std::size_t>(mono.zb)] = c;
  return v;
}

BiPoly from_coeff_vector(const std::vector<Rational> &v, int d) {
  BiPoly p;
  for (int b = 0; b <= d; ++b)
    if (!v[static_cast<std::size_t>(b)].is_zero())
      p += BiPoly::monomial(d - b, b, v[static_cast<std::size_t>(b)]);
  return p;
}

} // namespace

bool is_quasiinvariant(const DihedralConfig &cfg, const BiPoly &p) {
  if (cfg.m == 0) return true;
  for (const auto &[d, comp] : p.homogeneous_parts()) {
    const RatMatrix m = quasi_condition_matrix(cfg, d);
    const auto residuals = mat_vec(m, coeff_vector(comp, d));
    for (const Rational &r : residuals)
      if (!r.is_zero()) return false;
  }
  return true;
}

bool is_invariant(const DihedralConfig &cfg, const BiPoly &p) {
  if (!(p.conjugate_swap() == p)) return false;
  for (const auto &[mono, c] : p.terms())
    if ((mono.z - mono.zb) % cfg.N != 0) return false;
  return true;
}

int quasi_dim(const DihedralConfig &cfg, int d) {
  return (d + 1) - rank(quasi_condition_matrix(cfg, d));
}

std::vector<BiPoly> quasi_component(const DihedralConfig &cfg, int d) {
  std::vector<BiPoly> out;
  for (const auto &v : nullspace(quasi_condition_matrix(cfg, d)))
    out.push_back(from_coeff_vector(v, d));
  return out;
}

namespace {

/// The m x (m+1) odd-moment system whose kernel defines q_j: row s in 1..m,
/// column t in 0..m, entry ((m-2t)N + j)^(2s-1).
RatMatrix generator_system(const DihedralConfig &cfg, int j) {
  RatMatrix m(cfg.m, cfg.m + 1);
  for (int s = 1; s <= cfg.m; ++s)
    for (int t = 0; t <= cfg.m; ++t)
      m.at(s - 1, t) =
          Rational(odd_power(static_cast<long>(cfg.m - 2 * t) * cfg.N + j, s), mpz_class(1));
  return m;
}

void check_generator_index(const DihedralConfig &cfg, int j) {
  if (j < 1 || j > cfg.N - 1)
    throw std::invalid_argument("quasi_generator: j out of range");
}

BiPoly generator_from_coeffs(const DihedralConfig &cfg, int j,
                             const std::vector<Rational> &a) {
  BiPoly q;
  for (int t = 0; t <= cfg.m; ++t)
    if (!a[static_cast<std::size_t>(t)].is_zero())
      q += BiPoly::monomial((cfg.m - t) * cfg.N + j, t * cfg.N, a[static_cast<std::size_t>(t)]);
  return q;
}

} // namespace

BiPoly quasi_generator(const DihedralConfig &cfg, int j) {
  check_generator_index(cfg, j);
  const auto basis = nullspace(generator_system(cfg, j));
  if (basis.size() != 1)
    throw TheoremViolation("quasi_generator: defining system nullity is " +
                           std::to_string(basis.size()) + ", expected 1");
  // First-nonzero normalization lands on a_0 = 1, i.e. the monic form
  // z^(mN+j) + z*zb*(...).
  if (!(basis[0][0] == Rational(1)))
    throw TheoremViolation("quasi_generator: leading coefficient vanished");
  return generator_from_coeffs(cfg, j, basis[0]);
}

BiPoly quasi_generator_determinant(const DihedralConfig &cfg, int j) {
  check_generator_index(cfg, j);
  const RatMatrix sys = generator_system(cfg, j);
  std::vector<Rational> cofactor(static_cast<std::size_t>(cfg.m + 1));
  for (int t = 0; t <= cfg.m; ++t) {
    RatMatrix minor(cfg.m, cfg.m);
    for (int s = 0; s < cfg.m; ++s) {
      int cc = 0;
      for (int u = 0; u <= cfg.m; ++u) {
        if (u == t) continue;
        minor.at(s, cc++) = sys.at(s, u);
      }
    }
    Rational det = determinant(minor);
    if ((cfg.m + t) % 2 != 0) det = -det;
    cofactor[static_cast<std::size_t>(t)] = det;
  }
  return generator_from_coeffs(cfg, j, cofactor);
}

std::vector<const BiPoly *> QuasiBasis::ordered() const {
  std::vector<const BiPoly *> out;
  out.push_back(&q0);
  for (std::size_t i = 0; i < qj.size(); ++i) {
    out.push_back(&qj[i]);
    out.push_back(&qbarj[i]);
  }
  out.push_back(&qN);
  return out;
}

std::vector<int> QuasiBasis::degrees() const {
  std::vector<int> d;
  d.push_back(0);
  for (int j = 1; j < cfg.N; ++j) {
    d.push_back(cfg.m * cfg.N + j);
    d.push_back(cfg.m * cfg.N + j);
  }
  d.push_back(cfg.top_degree());
  return d;
}

QuasiBasis build_quasi_basis(const DihedralConfig &cfg) {
  QuasiBasis b{cfg, BiPoly(1), {}, {}, m_discriminant(cfg)};
  for (int j = 1; j < cfg.N; ++j) {
    b.qj.push_back(quasi_generator(cfg, j));
    b.qbarj.push_back(b.qj.back().conjugate_swap());
  }
  return b;
}

BiPoly sigma_expand(const DihedralConfig &cfg, const SigmaPoly &s) {
  const auto [s1, s2] = invariant_generators(cfg);
  BiPoly out;
  for (const auto &[mono, c] : s.terms())
    out += s1.pow(static_cast<unsigned>(mono.z)) * s2.pow(static_cast<unsigned>(mono.zb)) * c;
  return out;
}

namespace {

void add_sigma(std::map<GenIndex, SigmaPoly> &parts, GenIndex g, int sigma1_pow,
               int sigma2_pow, const Rational &c) {
  parts[g] += BiPoly::monomial(sigma1_pow, sigma2_pow, c);
}

/// One homogeneous layer of the decomposition. Splits off the extreme
/// (pure-z / pure-zb) terms against the matching generator, then divides the
/// remainder by sigma1 and recurses. The case split follows the degree
/// d = mN + jN + k, 0 <= k < N.
void decompose_homogeneous(const QuasiBasis &basis, BiPoly h, int sigma1_pow,
                           std::map<GenIndex, SigmaPoly> &parts) {
  const DihedralConfig &cfg = basis.cfg;
  if (h.is_zero()) return;
  const int d = *h.degree();
  if (d == 0) {
    add_sigma(parts, GenIndex{0, false}, sigma1_pow, 0, h.coeff(0, 0));
    return;
  }
  const Rational a = h.coeff(d, 0);
  const Rational b = h.coeff(0, d);
  const int k = d % cfg.N;
  const int j = (d - k) / cfg.N - cfg.m; // d = mN + jN + k
  const auto [s1, s2] = invariant_generators(cfg);

  if (k != 0) {
    if (j >= 0) {
      const BiPoly s2j = s2.pow(static_cast<unsigned>(j));
      if (!a.is_zero()) {
        h -= basis.qj[static_cast<std::size_t>(k - 1)] * s2j * a;
        add_sigma(parts, GenIndex{k, false}, sigma1_pow, j, a);
      }
      if (!b.is_zero()) {
        h -= basis.qbarj[static_cast<std::size_t>(k - 1)] * s2j * b;
        add_sigma(parts, GenIndex{k, true}, sigma1_pow, j, b);
      }
    } else if (!a.is_zero() || !b.is_zero()) {
      // Degree below mN: the slice is invariant, so pure powers of one
      // variable cannot occur.
      throw TheoremViolation("decompose: extreme term below degree mN (degree " +
                             std::to_string(d) + ")");
    }
  } else if (j <= cfg.m) {
    // d = (m+j)N with j <= m: extreme coefficients must agree (for j >= 1
    // this is the extreme-coefficient identity; for j <= 0 the
    // slice is invariant).
    if (!(a == b))
      throw TheoremViolation("decompose: unequal extreme coefficients at degree " +
                             std::to_string(d));
    if (!a.is_zero()) {
      h -= s2.pow(static_cast<unsigned>(d / cfg.N)) * a;
      add_sigma(parts, GenIndex{0, false}, sigma1_pow, d / cfg.N, a);
    }
  } else {
    // d = (m+j)N with j >= m+1: mix of q_N and sigma2^(m+j).
    const Rational lam = (a - b) / Rational(2);
    const Rational mu = (a + b) / Rational(2);
    if (!lam.is_zero()) {
      h -= basis.qN * s2.pow(static_cast<unsigned>(j - cfg.m - 1)) * lam;
      add_sigma(parts, GenIndex{cfg.N, false}, sigma1_pow, j - cfg.m - 1, lam);
    }
    if (!mu.is_zero()) {
      h -= s2.pow(static_cast<unsigned>(cfg.m + j)) * mu;
      add_sigma(parts, GenIndex{0, false}, sigma1_pow, cfg.m + j, mu);
    }
  }

  if (h.is_zero()) return;
  auto quotient = h.divide_exact(s1);
  if (!quotient)
    throw TheoremViolation("decompose: remainder not divisible by sigma1 at degree " +
                           std::to_string(d));
  decompose_homogeneous(basis, std::move(*quotient), sigma1_pow + 1, parts);
}

} // namespace

std::map<GenIndex, SigmaPoly> decompose_over_invariants(const QuasiBasis &basis,
                                                        const BiPoly &q) {
  if (!is_quasiinvariant(basis.cfg, q))
    throw std::invalid_argument("decompose_over_invariants: input is not quasiinvariant");
  std::map<GenIndex, SigmaPoly> parts;
  for (const auto &[d, comp] : q.homogeneous_parts())
    decompose_homogeneous(basis, comp, 0, parts);
  // Drop empty slots that cancellation may have produced.
  for (auto it = parts.begin(); it != parts.end();)
    it = it->second.is_zero() ? parts.erase(it) : std::next(it);
  return parts;
}

BiPoly recompose_over_invariants(const QuasiBasis &basis,
                                 const std::map<GenIndex, SigmaPoly> &parts) {
  const auto gens = basis.ordered();
  BiPoly out;
  for (const auto &[g, s] : parts) {
    const BiPoly *gen = nullptr;
    if (g.j == 0)
      gen = &basis.q0;
    else if (g.j == basis.cfg.N)
      gen = &basis.qN;
    else
      gen = g.bar ? &basis.qbarj[static_cast<std::size_t>(g.j - 1)]
                  : &basis.qj[static_cast<std::size_t>(g.j - 1)];
    out += sigma_expand(basis.cfg, s) * *gen;
  }
  return out;
}

std::vector<long> poincare_closed(const DihedralConfig &cfg, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("poincare_closed: negative degree");
  const int size = max_degree + 1;
  // Numerator 1 + 2t^(mN+1) + ... + 2t^(mN+N-1) + t^((2m+1)N).
  std::vector<long> series(static_cast<std::size_t>(size), 0);
  series[0] = 1;
  for (int j = 1; j <= cfg.N - 1; ++j) {
    const int e = cfg.m * cfg.N + j;
    if (e < size) series[static_cast<std::size_t>(e)] += 2;
  }
  if (cfg.top_degree() < size) series[static_cast<std::size_t>(cfg.top_degree())] += 1;
  // Multiply by 1/(1-t^2) then 1/(1-t^N).
  for (int step : {2, cfg.N})
    for (int x = step; x < size; ++x)
      series[static_cast<std::size_t>(x)] += series[static_cast<std::size_t>(x - step)];
  return series;
}

} // namespace quasinv
