#pragma once

#include "quasinv/rational.hpp"

#include <optional>
#include <vector>

namespace quasinv {

/// Dense matrix of exact rationals, row-major.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  Rational &at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Rational &at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  static RatMatrix identity(int n);
  RatMatrix transposed() const;
};

std::vector<Rational> mat_vec(const RatMatrix &m, const std::vector<Rational> &v);

/// Rank over Q by fraction-free (Bareiss) elimination; rows are cleared to
/// integers first.
int rank(const RatMatrix &m);

/// Exact determinant; throws std::invalid_argument on non-square input.
Rational determinant(const RatMatrix &m);

/// Basis of {v : M v = 0}, each vector scaled so its first nonzero entry is
/// 1. Deterministic: pivoting takes the first nonzero entry in row-major
/// order, free columns are processed in ascending order.
std::vector<std::vector<Rational>> nullspace(const RatMatrix &m);

/// One exact solution of A x = b, or nullopt when inconsistent. Free
/// variables (if any) are set to zero; when A has full column rank the
/// solution is unique.
std::optional<std::vector<Rational>> solve(const RatMatrix &a, const std::vector<Rational> &b);

/// Rank of the span of a family of coefficient vectors (rows).
int span_rank(const std::vector<std::vector<Rational>> &vectors);

/// True when v lies in the span of the given family.
bool in_span(const std::vector<std::vector<Rational>> &family, const std::vector<Rational> &v);

} // namespace quasinv
