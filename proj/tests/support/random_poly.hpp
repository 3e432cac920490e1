#pragma once

#include "quasinv/bipoly.hpp"

#include <random>

namespace quasinv::testing {

inline Rational random_rational(std::mt19937 &rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  return Rational(num(rng), den(rng));
}

inline BiPoly random_poly(std::mt19937 &rng, int max_terms = 6, int max_exp = 5) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  BiPoly p;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i)
    p += BiPoly::monomial(exp(rng), exp(rng), random_rational(rng));
  return p;
}

inline BiPoly random_nonzero_poly(std::mt19937 &rng, int max_terms = 6, int max_exp = 5) {
  for (;;) {
    BiPoly p = random_poly(rng, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

} // namespace quasinv::testing
