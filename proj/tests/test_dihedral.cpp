#include "quasinv/dihedral.hpp"

#include "quasinv/poly_io.hpp"

#include "doctest.h"
#include "support/mirror_oracle.hpp"
#include "support/random_poly.hpp"

#include <random>

using namespace quasinv;
using quasinv::testing::mirror_quasiinvariant_n2;
using quasinv::testing::random_poly;

namespace {

/// Random element of Q_m assembled from the module basis with random
/// invariant coefficients of sigma-degree <= budget.
BiPoly random_quasiinvariant(std::mt19937 &rng, const QuasiBasis &basis, int budget) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> small(0, budget);
  std::uniform_int_distribution<long> coeff(-5, 5);
  BiPoly out;
  for (const BiPoly *g : basis.ordered()) {
    SigmaPoly s;
    for (int t = 0; t <= pick(rng); ++t)
      s += BiPoly::monomial(small(rng), small(rng), Rational(coeff(rng)));
    out += sigma_expand(basis.cfg, s) * *g;
  }
  return out;
}

} // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(DihedralConfig(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(DihedralConfig(3, -1), std::invalid_argument);
  CHECK(DihedralConfig(3, 2).top_degree() == 15);
  CHECK(DihedralConfig(4, 0).group_order() == 8);
}

TEST_CASE("invariant generators") {
  for (int n : {2, 3, 5}) {
    const DihedralConfig cfg(n, 1);
    const auto [s1, s2] = invariant_generators(cfg);
    CHECK(s1 == BiPoly::monomial(1, 1));
    CHECK(s2 == BiPoly::monomial(n, 0) + BiPoly::monomial(0, n));
    CHECK(s1.conjugate_swap() == s1);
    CHECK(s2.conjugate_swap() == s2);
    CHECK(is_invariant(cfg, s1));
    CHECK(is_invariant(cfg, s2));
  }
}

TEST_CASE("m-discriminant") {
  CHECK(m_discriminant(DihedralConfig(2, 0)) ==
        BiPoly::monomial(2, 0) - BiPoly::monomial(0, 2));
  CHECK(render_poly(m_discriminant(DihedralConfig(2, 1))) ==
        "z^6 + -3*z^4*zb^2 + 3*z^2*zb^4 + -zb^6");
  for (int n : {2, 3, 4})
    for (int m = 0; m <= 2; ++m) {
      const DihedralConfig cfg(n, m);
      const BiPoly w = m_discriminant(cfg);
      CHECK(w.degree() == cfg.top_degree());
      CHECK(w.conjugate_swap() == -w);
      CHECK(is_quasiinvariant(cfg, w));
      CHECK(!is_invariant(cfg, w));
    }
}

TEST_CASE("quasi condition matrix, N=2 m=1 d=3") {
  const RatMatrix m = quasi_condition_matrix(DihedralConfig(2, 1), 3);
  REQUIRE(m.rows == 2);
  REQUIRE(m.cols == 4);
  // residue 0: (3, 0, -1, 0); residue 1: (0, 1, 0, -3)
  CHECK(m.at(0, 0) == Rational(3));
  CHECK(m.at(0, 1) == Rational(0));
  CHECK(m.at(0, 2) == Rational(-1));
  CHECK(m.at(0, 3) == Rational(0));
  CHECK(m.at(1, 0) == Rational(0));
  CHECK(m.at(1, 1) == Rational(1));
  CHECK(m.at(1, 2) == Rational(0));
  CHECK(m.at(1, 3) == Rational(-3));
  CHECK(nullspace(m).size() == 2);

  CHECK(quasi_condition_matrix(DihedralConfig(3, 0), 5).rows == 0);
}

TEST_CASE("degree-3 slice for N=2 m=1") {
  const DihedralConfig cfg(2, 1);
  const auto slice = quasi_component(cfg, 3);
  REQUIRE(slice.size() == 2);
  const BiPoly q1 = BiPoly::monomial(3, 0) + BiPoly::monomial(1, 2, 3);
  std::vector<std::vector<Rational>> span;
  for (const auto &p : slice) {
    std::vector<Rational> v(4);
    for (const auto &[mono, c] : p.terms()) v[static_cast<std::size_t>(mono.zb)] = c;
    span.push_back(v);
  }
  CHECK(in_span(span, {Rational(1), Rational(0), Rational(3), Rational(0)}));
  CHECK(in_span(span, {Rational(0), Rational(3), Rational(0), Rational(1)}));
  CHECK(is_quasiinvariant(cfg, q1));
}

TEST_CASE("is_quasiinvariant basics") {
  const DihedralConfig cfg(2, 1);
  CHECK(is_quasiinvariant(cfg, BiPoly::monomial(3, 0) + BiPoly::monomial(1, 2, 3)));
  CHECK(!is_quasiinvariant(cfg, BiPoly::monomial(1, 0))); // z is not
  for (int n : {2, 3, 4})
    for (int m : {1, 2}) {
      const DihedralConfig c(n, m);
      const auto [s1, s2] = invariant_generators(c);
      CHECK(is_quasiinvariant(c, s1.pow(2) * s2));
      CHECK(is_quasiinvariant(c, s2.pow(3)));
      CHECK(!is_quasiinvariant(c, BiPoly::monomial(1, 0)));
    }
  // m = 0: everything qualifies.
  std::mt19937 rng(3);
  for (int it = 0; it < 10; ++it)
    CHECK(is_quasiinvariant(DihedralConfig(5, 0), random_poly(rng)));
}

TEST_CASE("quasiinvariance agrees with the mirror-line oracle for N=2") {
  const int m = 1;
  const DihedralConfig cfg(2, m);
  // Spot values.
  CHECK(mirror_quasiinvariant_n2(BiPoly::monomial(3, 0) + BiPoly::monomial(1, 2, 3), m));
  CHECK(!mirror_quasiinvariant_n2(BiPoly::monomial(1, 0), m));
  // Random agreement, both on raw polynomials (usually non-quasiinvariant)
  // and on slice elements (always quasiinvariant).
  std::mt19937 rng(5);
  int positives = 0;
  for (int it = 0; it < 200; ++it) {
    const BiPoly p = random_poly(rng, 5, 6);
    const bool lhs = is_quasiinvariant(cfg, p);
    CHECK(lhs == mirror_quasiinvariant_n2(p, m));
    positives += lhs ? 1 : 0;
  }
  for (int d = 0; d <= 8; ++d)
    for (const BiPoly &p : quasi_component(cfg, d)) {
      CHECK(mirror_quasiinvariant_n2(p, m));
      ++positives;
    }
  CHECK(positives > 10); // the agreement check saw both outcomes

  const DihedralConfig cfg2(2, 2);
  for (int it = 0; it < 200; ++it) {
    const BiPoly p = random_poly(rng, 5, 7);
    CHECK(is_quasiinvariant(cfg2, p) == mirror_quasiinvariant_n2(p, 2));
  }
}

TEST_CASE("is_invariant") {
  const DihedralConfig cfg(2, 1);
  CHECK(is_invariant(cfg, BiPoly::monomial(2, 0) + BiPoly::monomial(0, 2)));
  CHECK(!is_invariant(cfg, m_discriminant(cfg)));
  // z*zb^3 + z^3*zb = sigma1 * sigma2 at N=2.
  CHECK(is_invariant(cfg, BiPoly::monomial(1, 3) + BiPoly::monomial(3, 1)));
  CHECK(!is_invariant(cfg, BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1)));
}

TEST_CASE("quasi_dim against frozen values") {
  const DihedralConfig cfg(2, 1);
  const std::vector<int> expected{1, 0, 2, 2, 3, 4, 5, 6};
  for (int d = 0; d < static_cast<int>(expected.size()); ++d)
    CHECK(quasi_dim(cfg, d) == expected[static_cast<std::size_t>(d)]);
  CHECK(quasi_dim(DihedralConfig(4, 2), 0) == 1);
  for (int d = 0; d <= 6; ++d) CHECK(quasi_dim(DihedralConfig(3, 0), d) == d + 1);
}

TEST_CASE("quasi generators") {
  CHECK(render_poly(quasi_generator(DihedralConfig(2, 1), 1)) == "z^3 + 3*z*zb^2");
  CHECK(render_poly(quasi_generator(DihedralConfig(3, 1), 1)) == "z^4 + 2*z*zb^3");
  CHECK_THROWS_AS((void)quasi_generator(DihedralConfig(3, 1), 3), std::invalid_argument);
  for (int n : {2, 3, 4, 5})
    for (int m = 0; m <= 2; ++m) {
      const DihedralConfig cfg(n, m);
      for (int j = 1; j < n; ++j) {
        const BiPoly q = quasi_generator(cfg, j);
        CHECK(q.degree() == m * n + j);
        CHECK(q.coeff(m * n + j, 0) == Rational(1));
        CHECK(is_quasiinvariant(cfg, q));
        // Determinant route agrees up to the (nonzero) leading scalar.
        const BiPoly det_route = quasi_generator_determinant(cfg, j);
        const Rational lead = det_route.coeff(m * n + j, 0);
        CHECK(!lead.is_zero());
        CHECK(det_route == q * lead);
      }
    }
}

TEST_CASE("low-degree slices are invariant") {
  for (int n : {2, 3, 4})
    for (int m : {1, 2}) {
      const DihedralConfig cfg(n, m);
      for (int d = 0; d <= m * n; ++d)
        for (const BiPoly &p : quasi_component(cfg, d)) CHECK(is_invariant(cfg, p));
    }
}

TEST_CASE("extreme coefficients agree at degrees mN+lN") {
  for (int n : {2, 3})
    for (int m : {1, 2}) {
      const DihedralConfig cfg(n, m);
      for (int l = 1; l <= m; ++l) {
        const int d = m * n + l * n;
        for (const BiPoly &p : quasi_component(cfg, d))
          CHECK(p.coeff(d, 0) == p.coeff(0, d));
      }
    }
}

TEST_CASE("poincare closed form") {
  const auto p21 = poincare_closed(DihedralConfig(2, 1), 7);
  CHECK(p21 == std::vector<long>{1, 0, 2, 2, 3, 4, 5, 6});
  const auto p31 = poincare_closed(DihedralConfig(3, 1), 5);
  CHECK(p31 == std::vector<long>{1, 0, 1, 1, 3, 3});
  const auto p40 = poincare_closed(DihedralConfig(4, 0), 9);
  for (int d = 0; d <= 9; ++d) CHECK(p40[static_cast<std::size_t>(d)] == d + 1);
}

TEST_CASE("computed dimensions match the closed series") {
  for (auto [n, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {4, 1}, {5, 0}}) {
    const DihedralConfig cfg(n, m);
    const int top = 2 * cfg.top_degree() + 4;
    const auto closed = poincare_closed(cfg, top);
    for (int d = 0; d <= top; ++d)
      CHECK(quasi_dim(cfg, d) == closed[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("antiinvariant slice dimensions follow t^topdeg/((1-t^2)(1-t^N))") {
  for (auto [n, m] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const DihedralConfig cfg(n, m);
    const int top = cfg.top_degree() + 2 * n + 2;
    // Expected series: shift of the invariant-ring series by the
    // discriminant degree.
    std::vector<long> expected(static_cast<std::size_t>(top + 1), 0);
    if (cfg.top_degree() <= top) expected[static_cast<std::size_t>(cfg.top_degree())] = 1;
    for (int step : {2, n})
      for (int x = step; x <= top; ++x)
        expected[static_cast<std::size_t>(x)] += expected[static_cast<std::size_t>(x - step)];
    for (int d = 0; d <= top; ++d) {
      // Antiinvariant quasiinvariants of degree d: quasi conditions plus
      // residue-0-only terms plus coefficient antisymmetry.
      const RatMatrix quasi = quasi_condition_matrix(cfg, d);
      std::vector<std::vector<Rational>> rows;
      for (int i = 0; i < quasi.rows; ++i) {
        std::vector<Rational> r(static_cast<std::size_t>(d + 1));
        for (int j = 0; j < quasi.cols; ++j) r[static_cast<std::size_t>(j)] = quasi.at(i, j);
        rows.push_back(std::move(r));
      }
      for (int b = 0; b <= d; ++b) {
        const int residue = (((d - b) - b) % n + n) % n;
        if (residue != 0) {
          std::vector<Rational> r(static_cast<std::size_t>(d + 1));
          r[static_cast<std::size_t>(b)] = Rational(1);
          rows.push_back(std::move(r));
        }
      }
      for (int b = 0; 2 * b <= d; ++b) {
        std::vector<Rational> r(static_cast<std::size_t>(d + 1));
        r[static_cast<std::size_t>(b)] += Rational(1);
        r[static_cast<std::size_t>(d - b)] += Rational(1);
        rows.push_back(std::move(r));
      }
      RatMatrix m(static_cast<int>(rows.size()), d + 1);
      for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
          m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int dim = (d + 1) - rank(m);
      CHECK(dim == expected[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("decompose_over_invariants on simple inputs") {
  const DihedralConfig cfg(2, 1);
  const QuasiBasis basis = build_quasi_basis(cfg);
  const auto [s1, s2] = invariant_generators(cfg);

  // A basis element decomposes onto itself.
  auto parts = decompose_over_invariants(basis, basis.qj[0]);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == GenIndex{1, false});
  CHECK(parts.begin()->second == BiPoly(1));

  // A pure invariant lands on q_0.
  parts = decompose_over_invariants(basis, s1 * s1);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == GenIndex{0, false});
  CHECK(parts.begin()->second == BiPoly::monomial(2, 0)); // sigma1^2

  // q_N + sigma2^(2m+1) splits into the q_N slot and the invariant slot.
  const BiPoly q = basis.qN + s2.pow(3);
  parts = decompose_over_invariants(basis, q);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(GenIndex{0, false}) == BiPoly::monomial(0, 3));
  CHECK(parts.at(GenIndex{2, false}) == BiPoly(1));
  CHECK(recompose_over_invariants(basis, parts) == q);

  CHECK_THROWS_AS((void)decompose_over_invariants(basis, BiPoly::monomial(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("decompose/recompose is the identity on random quasiinvariants") {
  std::mt19937 rng(71);
  for (auto [n, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {4, 0}}) {
    const DihedralConfig cfg(n, m);
    const QuasiBasis basis = build_quasi_basis(cfg);
    for (int it = 0; it < 25; ++it) {
      const BiPoly q = random_quasiinvariant(rng, basis, 3);
      REQUIRE(is_quasiinvariant(cfg, q));
      const auto parts = decompose_over_invariants(basis, q);
      CHECK(recompose_over_invariants(basis, parts) == q);
      for (const auto &[g, s] : parts) CHECK(!s.is_zero());
    }
  }
}

TEST_CASE("quasi basis construction") {
  const DihedralConfig cfg(3, 1);
  const QuasiBasis b = build_quasi_basis(cfg);
  CHECK(b.degrees() == std::vector<int>{0, 4, 4, 5, 5, 9});
  CHECK(b.qbarj[0] == b.qj[0].conjugate_swap());
  CHECK(b.q0 == BiPoly(1));
  for (const BiPoly *g : b.ordered()) CHECK(is_quasiinvariant(cfg, *g));
}
