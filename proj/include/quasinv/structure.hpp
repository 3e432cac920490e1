#pragma once

#include "quasinv/harmonic.hpp"

#include <string>
#include <vector>

namespace quasinv {

/// Shared state for the structure-theory computations: the quasi basis, the
/// harmonic space and the discriminant in the q_N normalization. All maps
/// and forms are invariant under rescaling the discriminant, so the
/// unit-normal conversion never enters here.
struct StructureContext {
  DihedralConfig cfg;
  QuasiBasis basis;
  GradedBasis harmonics;
  LocalElement w;

  explicit StructureContext(const DihedralConfig &config);
};

/// pi(q) = L_q(q_N) for a quasiinvariant q (not necessarily homogeneous).
/// Checks that the image is a polynomial lying in the harmonic span and
/// throws TheoremViolation otherwise. A homogeneous q of degree d lands in
/// degree (2m+1)N - d.
BiPoly pi_map(const StructureContext &ctx, const BiPoly &q);

/// Matrix of pi restricted to the harmonic space, in the coordinates of the
/// basis {q_0, q_1, qbar_1, ..., q_N}. Nonsingularity is the content of the
/// isomorphism statement; callers test the determinant.
RatMatrix pi_matrix_on_H(const StructureContext &ctx);

/// Gram matrix G[p][q] = (L_p L_q q_N)(0) over the same basis order.
RatMatrix gram_matrix(const StructureContext &ctx);

/// Dimension of the degree-d slice of the ideal generated by sigma1, sigma2
/// inside Q_m: rank of {sigma1 * Q_(d-2), sigma2 * Q_(d-N)}.
int ideal_dim(const DihedralConfig &cfg, int d);

/// One verification step: name, outcome, failure witness, wall time.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness; // non-empty exactly when failed
  long long ms = 0;
};

/// Degreewise comparison of dim ker(pi_m) against ideal_dim for d <= D.
CheckResult kernel_pi_check(const StructureContext &ctx, int max_degree);

/// Palindromicity of the harmonic Poincare polynomial.
bool duality_check(const DihedralConfig &cfg);
bool duality_check(const GradedBasis &space);

struct VerifyReport {
  DihedralConfig cfg;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// {"N":..,"m":..,"version":..,"checks":[{"name","status","witness","ms"}]}
  std::string to_json() const;
  std::string to_text() const;
};

/// Runs the whole theorem suite for one configuration. Mathematical
/// failures are recorded in the report, never thrown.
VerifyReport run_full_verification(const DihedralConfig &cfg);

} // namespace quasinv
