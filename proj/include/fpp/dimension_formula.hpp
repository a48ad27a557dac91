#pragma once

// Dimension formula for automorphic forms on the 2-ball quotient by a cocompact group.

#include <optional>
#include <string>
#include <vector>

#include "fpp/cyclotomic.hpp"

namespace fpp {

/// One conjugacy-class term of the dimension formula.
struct FixedPointClass {
  std::string label;
  int r = 0;               // dimension of the fixed set: 2 (identity) or 0 (isolated point)
  Rat virtual_euler = 1;   // e(Delta_delta \ Fix(delta))
  RootOfUnity j{1, 0};     // j_delta
  int m = 1;               // m(delta)
  std::vector<RootOfUnity> normal_eigenvalues;

  /// Throws std::invalid_argument when the r / eigenvalue shape is inconsistent.
  void validate() const;
};

struct ClassDataset {
  std::string label;
  int cyclotomic_modulus = 1;
  std::string j_normalization;
  std::vector<FixedPointClass> classes;
};

/// Coefficient of z^r in (1-z)^{3k-1} prod_i 1/(1 - nu_i + nu_i z).
/// Throws EigenvalueOne if some nu_i = 1.
CycElt R_coefficient(int r, int k, const std::vector<CycElt>& normal_eigenvalues);

/// The exact (unrounded) sum of the formula.
CycElt dimension_sum(const ClassDataset& dataset, int k);
/// The sum as a nonnegative integer; throws NotAnInteger otherwise.
long dimension(const ClassDataset& dataset, int k);

/// Identity term plus the order-7 classes at the three fixed points, with
/// tangent eigenvalues read off diag(zeta, zeta^2, zeta^4) at the basis
/// vector lying in the ball of H_c and translated by sigma.
/// j_delta = (nu_1 nu_2)^j_exponent.
ClassDataset build_gamma_dataset(int j_exponent = 1);
/// One order-7 point and the order-3 points found by the branch solver.
ClassDataset build_gamma_tilde_dataset(int j_exponent_7 = 1, int j_exponent_3 = 1);

/// Applies zeta_N -> zeta_N^s to every root of unity in the dataset.
ClassDataset galois_conjugate(const ClassDataset& dataset, int s);

struct NormalizationCandidate {
  int j_exponent_7 = 0;
  int j_exponent_3 = 0;
  std::optional<long> gamma2, gamma3, gamma_tilde2, gamma_tilde3;  // empty: not an integer

  bool all_integral() const { return gamma2 && gamma3 && gamma_tilde2 && gamma_tilde3; }
  /// Distance to the targets (1, 4, 1, 1); only meaningful when all_integral().
  long distance() const;
};

/// Tries j_delta = (nu_1 nu_2)^s for s in [-range, range], independently for order-7 and order-3 classes.
std::vector<NormalizationCandidate> normalization_search(int range = 3);

}  // namespace fpp
