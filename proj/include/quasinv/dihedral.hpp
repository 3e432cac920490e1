#pragma once

#include "quasinv/bipoly.hpp"
#include "quasinv/linalg.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace quasinv {

/// Raised when a computation contradicts a structural identity the library
/// is built to verify. Callers either propagate it (unit tests) or record it
/// as a failed check (verification reports).
class TheoremViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The dihedral group I2(N) (N mirror lines at angles pi*k/N) with constant
/// multiplicity m on every mirror.
struct DihedralConfig {
  int N;
  int m;

  DihedralConfig(int n_mirrors, int multiplicity) : N(n_mirrors), m(multiplicity) {
    if (N < 2) throw std::invalid_argument("DihedralConfig: N must be >= 2");
    if (m < 0) throw std::invalid_argument("DihedralConfig: m must be >= 0");
  }

  /// Degree of the m-discriminant, (2m+1)N.
  int top_degree() const { return (2 * m + 1) * N; }
  int group_order() const { return 2 * N; }
};

/// (sigma1, sigma2) = (z*zb, z^N + zb^N), free generators of the invariant ring.
std::pair<BiPoly, BiPoly> invariant_generators(const DihedralConfig &cfg);

/// (z^N - zb^N)^(2m+1): the antiinvariant quasiinvariant of lowest degree,
/// proportional to the m-discriminant in these coordinates.
BiPoly m_discriminant(const DihedralConfig &cfg);

/// Quasiinvariance conditions on the homogeneous degree-d slice: rows are
/// indexed by (residue j mod N, odd order 2s-1 with 1 <= s <= m), columns by
/// the coefficient a_b of z^(d-b) zb^b. Row (j, s) carries (d-2b)^(2s-1) in
/// column b when b = j (mod N). The nullspace is exactly the degree-d slice
/// of Q_m (the conditions come from the polar form of the odd normal
/// derivatives on the mirror lines, collapsed per residue class by a
/// Vandermonde argument).
RatMatrix quasi_condition_matrix(const DihedralConfig &cfg, int d);

bool is_quasiinvariant(const DihedralConfig &cfg, const BiPoly &p);

/// Invariance = fixed by the bar involution and every term's exponents agree
/// mod N (the rotation acts on z^a zb^b by the (a-b)-th power of a root of
/// unity).
bool is_invariant(const DihedralConfig &cfg, const BiPoly &p);

/// Dimension of the degree-d slice of Q_m.
int quasi_dim(const DihedralConfig &cfg, int d);

/// Basis of the degree-d slice of Q_m, from the condition-matrix nullspace
/// (deterministic, first-nonzero-normalized coefficient vectors).
std::vector<BiPoly> quasi_component(const DihedralConfig &cfg, int d);

/// The generator q_j, 1 <= j <= N-1: the unique monic polynomial
///   z^(mN+j) + a_1 zb^N z^((m-1)N+j) + ... + a_m zb^(mN) z^j
/// killed by the m odd-moment conditions. Throws TheoremViolation when the
/// defining system's nullity is not one.
BiPoly quasi_generator(const DihedralConfig &cfg, int j);

/// Same polynomial up to a scalar via the determinant formula (last-row
/// cofactor expansion over the odd-moment matrix). Kept as an independent
/// route; tests assert proportionality with quasi_generator.
BiPoly quasi_generator_determinant(const DihedralConfig &cfg, int j);

/// The module basis {q_0 = 1, q_j, qbar_j, q_N} of Q_m over the invariants.
struct QuasiBasis {
  DihedralConfig cfg;
  BiPoly q0;
  std::vector<BiPoly> qj;    // q_1 .. q_{N-1}
  std::vector<BiPoly> qbarj; // qbar_1 .. qbar_{N-1}
  BiPoly qN;

  /// Canonical enumeration q_0, q_1, qbar_1, ..., q_{N-1}, qbar_{N-1}, q_N.
  std::vector<const BiPoly *> ordered() const;
  std::vector<int> degrees() const;
};

QuasiBasis build_quasi_basis(const DihedralConfig &cfg);

/// Index into the basis: j in [0, N], bar meaningful for 1 <= j <= N-1.
struct GenIndex {
  int j = 0;
  bool bar = false;
  friend bool operator<(GenIndex a, GenIndex b) {
    return a.j != b.j ? a.j < b.j : a.bar < b.bar;
  }
  friend bool operator==(GenIndex a, GenIndex b) = default;
};

/// Invariant coefficients as polynomials in the sigma generators: exponent
/// pair (a, b) stands for sigma1^a sigma2^b.
using SigmaPoly = BiPoly;

/// Substitutes sigma1 = z*zb, sigma2 = z^N + zb^N into a SigmaPoly.
BiPoly sigma_expand(const DihedralConfig &cfg, const SigmaPoly &s);

/// Writes a quasiinvariant q as sum of s_i * basis_i with invariant
/// coefficients s_i, by stripping extreme terms per homogeneous degree and
/// recursing on the sigma1 quotient. Throws std::invalid_argument when q is
/// not quasiinvariant, TheoremViolation when an intermediate remainder fails
/// to divide by sigma1 (which would contradict the free-module structure).
std::map<GenIndex, SigmaPoly> decompose_over_invariants(const QuasiBasis &basis,
                                                        const BiPoly &q);

/// Reassembles sum of sigma_expand(s_i) * basis_i.
BiPoly recompose_over_invariants(const QuasiBasis &basis,
                                 const std::map<GenIndex, SigmaPoly> &parts);

/// Power-series coefficients t^0..t^D of the closed Poincare series
///   (1 + 2 t^(mN+1) + ... + 2 t^(mN+N-1) + t^((2m+1)N)) / ((1-t^2)(1-t^N)).
std::vector<long> poincare_closed(const DihedralConfig &cfg, int max_degree);

} // namespace quasinv
