#pragma once

#include "quasinv/calogero.hpp"
#include "quasinv/dihedral.hpp"

#include <map>
#include <string>
#include <vector>

namespace quasinv {

/// Degree-indexed polynomial basis of a graded subspace.
struct GradedBasis {
  DihedralConfig cfg;
  std::map<int, std::vector<BiPoly>> components;
  int total_dim = 0;

  std::vector<int> degree_multiset() const;
  /// {"N":..,"m":..,"components":{"d":[poly,..]},"total_dim":..}
  std::string to_json() const;
};

/// Basis of the homogeneous degree-d kernel of L1 and L2 jointly. The kernel
/// conditions are linear in the coefficients: numerators over the common
/// delta power must vanish identically.
std::vector<BiPoly> harmonic_component(const DihedralConfig &cfg, int d);

/// The full space of m-harmonic polynomials, degrees 0..(2m+1)N. Verifies
/// that the total dimension is 2N, that the next N+2 degrees contribute
/// nothing, and that each graded slice spans the same space as the quasi
/// basis elements of that degree. Violations throw TheoremViolation.
GradedBasis harmonic_space(const DihedralConfig &cfg);

/// Component sizes h_0..h_((2m+1)N) of a precomputed space.
std::vector<int> harmonic_poincare(const GradedBasis &space);
std::vector<int> harmonic_poincare(const DihedralConfig &cfg);

/// Certificate that H_m carries the regular representation, avoiding
/// cyclotomic arithmetic: the rotation eigenspace (residue r of a-b mod N)
/// dimensions must all equal 2, the reflection z <-> zb must have trace 0,
/// and it must map the residue-r slice onto the residue-(-r) slice.
struct RepReport {
  std::vector<int> residue_dims;
  Rational reflection_trace;
  bool residues_all_two = false;
  bool trace_zero = false;
  bool swap_pairs_residues = false;
  bool pass() const { return residues_all_two && trace_zero && swap_pairs_residues; }
};

RepReport regular_rep_check(const DihedralConfig &cfg);
RepReport regular_rep_check(const GradedBasis &space);

/// Basis of the homogeneous degree-d kernel of L alone.
std::vector<BiPoly> laplacian_kernel_component(const DihedralConfig &cfg, int d);

/// Shared helper: coefficient vector of a homogeneous degree-d polynomial
/// over the monomial basis z^(d-b) zb^b, b = 0..d.
std::vector<Rational> homogeneous_coeffs(const BiPoly &p, int d);

} // namespace quasinv
