#pragma once

// Bernoulli numbers, real Dirichlet characters, special L-values and the covolume formula.

#include <map>
#include <string>
#include <vector>

#include "fpp/exact_scalars.hpp"

namespace fpp {

/// B_n with the B_1 = -1/2 convention.
Rat bernoulli_number(int n);
/// Coefficients of B_n(x), constant term first.
std::vector<Rat> bernoulli_polynomial(int n);
Rat evaluate(const std::vector<Rat>& poly, const Rat& x);

/// Real primitive character attached to a fundamental discriminant (Kronecker symbol).
class DirichletCharacter {
 public:
  /// Throws NotPrimitive unless `discriminant` is 1 or a fundamental discriminant.
  static DirichletCharacter from_discriminant(long discriminant);

  long discriminant() const { return discriminant_; }
  long modulus() const { return static_cast<long>(values_.size()); }
  /// chi(a) for any integer a.
  int operator()(long a) const;
  /// True iff chi(-1) = -1.
  bool is_odd() const { return (*this)(-1) == -1; }

 private:
  long discriminant_ = 1;
  std::vector<int> values_;
};

/// B_{n,chi} = f^{n-1} sum_{a=1}^{f} chi(a) B_n(a/f).
///
/// For the trivial character at n = 1 the sum yields B_1(1) = +1/2; this
/// returns the ordinary B_1 = -1/2 instead.
Rat generalized_bernoulli(int n, const DirichletCharacter& chi);

/// L(n, chi) in closed form. Requires chi(-1) = (-1)^n (ParityMismatch
/// otherwise) and sqrt(f) expressible as a rational times a power of sqrt(7).
SymbolicReal dirichlet_L_value(int n, const DirichletCharacter& chi);
SymbolicReal riemann_zeta(int n);

/// sqrt(n) as a SymbolicReal; throws Unsupported unless n = 7^e * s^2.
SymbolicReal symbolic_sqrt(const Int& n);

/// Truncated Dirichlet series with a rigorous tail bound.
struct SeriesEstimate {
  Rat partial_sum;      // MPFR partial sum converted exactly
  Rat tail_bound;       // bound on |L - exact partial sum|
  Rat rounding_bound;   // bound on |MPFR sum - exact partial sum|
  long terms = 0;

  Rat total_error() const { return tail_bound + rounding_bound; }
  double value() const { return partial_sum.get_d(); }
};

/// sum_{m <= terms} chi(m)/m^n. For n >= 2 the tail is bounded by
/// terms^{1-n}/(n-1); for n = 1 (nontrivial chi) by partial summation.
SeriesEstimate l_series_oracle(int n, const DirichletCharacter& chi, long terms);

/// The inputs of the covolume formula for F = Q.
struct VolumeInput {
  Int D_K = 7;
  Int D_F = 1;
  int field_degree = 1;
  SymbolicReal zeta_value;
  SymbolicReal l_value;
  std::map<std::string, Rat> local_factors;

  Rat local_factor_product() const;
};

/// zeta(2), L(3, chi_-7), local factors e(2) = 3, e(7) = 1.
VolumeInput default_volume_input();

/// The alternative closed form -(7/8) pi^3 7^(-5/2), kept for comparison.
SymbolicReal printed_l_value();

/// 3 D_K^{5/2} / D_F (16 pi^5)^{-1} zeta_F(2) L(3, chi) prod e(v), symbolically.
SymbolicReal covolume_symbolic(const VolumeInput& v);
/// The covolume as an exact rational; throws NotRational if pi or sqrt(7) survive.
Rat covolume(const VolumeInput& v);

Rat euler_number_of_cover(const Rat& covolume, long index);

}  // namespace fpp
