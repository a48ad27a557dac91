#pragma once

// Cyclic quotient singularities, their resolutions, and orbifold Euler/signature heights.

#include <string>
#include <vector>

#include "fpp/cyclotomic.hpp"
#include "fpp/linalg.hpp"

namespace fpp {

/// Type (n, q): C^2 / <diag(zeta_n, zeta_n^q)>, 1 <= q < n, gcd(n, q) = 1.
struct CyclicSingularity {
  int n = 2;
  int q = 1;

  CyclicSingularity() = default;
  CyclicSingularity(int n, int q);
  /// Same singularity with q replaced by min(q, q^{-1} mod n).
  CyclicSingularity canonical() const;
  auto operator<=>(const CyclicSingularity&) const = default;
};

std::string to_string(const CyclicSingularity& s);

/// Hirzebruch-Jung string: exceptional curves with self-intersections -b_i.
struct HJChain {
  std::vector<int> self_intersections;
  MatX<Rat> intersection_matrix;

  std::size_t length() const { return self_intersections.size(); }
};

HJChain hj_expand(const CyclicSingularity& s);
/// Builds the chain for given self-intersections (all <= -2).
HJChain chain_from_self_intersections(std::vector<int> self_intersections);
/// b_1 - 1/(b_2 - 1/(...)).
Rat continued_fraction_value(const HJChain& chain);
std::string to_string(const HJChain& chain);

/// Type of the rotation diag(r1, r2); throws NotPrimitive unless r1 generates the group.
CyclicSingularity singularity_type_from_rotation(const RootOfUnity& r1, const RootOfUnity& r2);

/// s(q, n) = sum_{k=1}^{n-1} ((k/n)) ((kq/n)).
Rat dedekind_sum(long q, long n);
/// delta(n, q) = -4 s(q, n).
Rat signature_defect(const CyclicSingularity& s);

struct OrbifoldPoint {
  std::string label;
  CyclicSingularity type;
};

struct OrbifoldSurface {
  std::string label;
  Rat euler;
  Rat signature;
  std::vector<OrbifoldPoint> points;
};

/// e - sum (1 - 1/d_i).
Rat euler_height(const OrbifoldSurface& x);
/// sign - sum delta(d_i, e_i).
Rat signature_height(const OrbifoldSurface& x);

/// c2(Y) = deg * e(X) and sign(Y) = deg * sign(X) for the heights of X.
bool check_cover_multiplicativity(const Rat& y_euler, const Rat& y_sign, const OrbifoldSurface& x, long degree);

struct ResolvedInvariants {
  Rat euler;
  Rat signature;
  int blowups = 0;
};

/// Replaces each point by its Hirzebruch-Jung string: euler += curves, signature -= curves.
ResolvedInvariants resolve_invariants(const OrbifoldSurface& x);

/// The singular quotient with three (7,3) points (euler 3, signature 1).
OrbifoldSurface x_gamma();
/// One (7,3) point and three (3,2) points (euler 3, signature 1).
OrbifoldSurface x_gamma_tilde();

struct BranchSearch {
  /// Multisets satisfying the Euler height equation.
  std::vector<std::vector<CyclicSingularity>> euler_candidates;
  /// Candidates that also satisfy the signature height equation.
  std::vector<std::vector<CyclicSingularity>> solutions;
};

/// Exhaustive search for additional branch points (d, e), d <= d_max, with
/// e in canonical form, such that both heights reach their targets.
BranchSearch solve_branch_data(const Rat& total_euler, const Rat& total_sign,
                               const std::vector<CyclicSingularity>& known_points, const Rat& target_euler_height,
                               const Rat& target_sign_height, int d_max);

/// Solves M a = (k (b_i - 2) - d_i)_i exactly, where M is the chain's
/// intersection matrix and K.E_i = b_i - 2 by adjunction.
std::vector<Rat> chain_divisor_system(const HJChain& chain, int k, const std::vector<Rat>& d);

}  // namespace fpp
