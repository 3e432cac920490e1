#pragma once

#include "quasinv/dihedral.hpp"
#include "quasinv/local_element.hpp"

namespace quasinv {

/// The gauged Calogero-Moser operator of I2(N) with constant multiplicity m,
/// in closed rational form over Q:
///   L = 4 dz dzb + (4mN / delta) (zb^(N-1) dz - z^(N-1) dzb),
/// obtained from the sum over the N mirror terms by the root-of-unity
/// identity; the sign and constant are pinned by L(z*zb) = 4(1-mN) and
/// L(m_discriminant) = 0.
LocalElement apply_L(const DihedralConfig &cfg, const LocalElement &e);
LocalElement apply_L(const DihedralConfig &cfg, const BiPoly &p);

/// The quantum integral attached to a homogeneous quasiinvariant q of degree
/// d, applied to p:
///   L_q(p) = (2^d d!)^-1 * sum_i (-1)^i C(d,i) L^(d-i)(q * L^i(p)).
/// Throws std::invalid_argument when q is not quasiinvariant or not
/// homogeneous.
LocalElement apply_integral(const DihedralConfig &cfg, const BiPoly &q,
                            const LocalElement &p);

/// The degree-N integral: apply_integral with symbol sigma2, rescaled by
/// 2^-N so that the m = 0 specialization is exactly dz^N + dzb^N. The
/// rescaling does not affect any kernel.
LocalElement apply_L2(const DihedralConfig &cfg, const LocalElement &p);

/// A quantum integral represented by its action (symbols are never expanded
/// into operator coefficient tables).
struct OperatorHandle {
  DihedralConfig cfg;
  BiPoly symbol;
  int degree;

  OperatorHandle(DihedralConfig config, BiPoly sym);
  LocalElement apply(const LocalElement &p) const {
    return apply_integral(cfg, symbol, p);
  }
};

/// The closed form of the constant L_w(w) for the unit-normal discriminant:
///   N^(2m+1) / 2^((2m+1)(N-1)) * prod_{j=1..2m+1} (2j-2m-1)
///     * prod_{d=1..(2m+1)N, N not| d} (d - mN).
/// At m = 0 this is N!/2^(N-1), the dihedral case of the Macdonald identity.
Rational discriminant_pairing_closed(const DihedralConfig &cfg);

/// The same constant by direct iteration: L^M(q_N^2) / (2^M M!) with
/// M = (2m+1)N, rescaled from the q_N normalization to the unit-normal one
/// by the conversion factor c^2 = -4^(N(2m+1)). Agreement with the closed
/// form across the test grid validates both the operator and the
/// conversion.
Rational discriminant_pairing_direct(const DihedralConfig &cfg);

/// L_{q_N}(q_N) in the q_N normalization (the constant the Gram-form checks
/// use directly, without the unit-normal conversion).
Rational discriminant_pairing(const DihedralConfig &cfg);

} // namespace quasinv
