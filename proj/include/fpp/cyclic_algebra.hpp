#pragma once

// The cyclic algebra D = L + Lu + Lu^2 over K, with u^3 = alpha and a u = u a^sigma.

#include <array>
#include <string>
#include <vector>

#include "fpp/linalg.hpp"
#include "fpp/quadratic_field.hpp"

namespace fpp {

/// x0 + x1 u + x2 u^2 with coefficients in L = Q(zeta_7).
///
/// The algebra parameter alpha is carried by every element so that
/// diagnostics can vary it; binary operations require equal alpha.
class AlgElt {
 public:
  AlgElt() : AlgElt(fpp::alpha()) {}
  explicit AlgElt(CycElt alpha) : AlgElt(std::move(alpha), CycElt(0), CycElt(0), CycElt(0)) {}
  AlgElt(CycElt alpha, CycElt x0, CycElt x1, CycElt x2);

  /// Scalar a in L embedded as a + 0u + 0u^2.
  static AlgElt scalar(const CycElt& a, const CycElt& alpha = fpp::alpha());
  static AlgElt u(const CycElt& alpha = fpp::alpha());

  const CycElt& alpha() const { return alpha_; }
  const CycElt& operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }

  friend AlgElt operator+(const AlgElt& a, const AlgElt& b);
  friend AlgElt operator-(const AlgElt& a, const AlgElt& b);
  friend AlgElt operator-(const AlgElt& a);
  friend AlgElt operator*(const AlgElt& a, const AlgElt& b);
  friend bool operator==(const AlgElt& a, const AlgElt& b);

 private:
  CycElt alpha_;
  std::array<CycElt, 3> x_;
};

AlgElt alg_mul(const AlgElt& a, const AlgElt& b);

/// The matrix embedding a -> diag(a, a^sigma, a^sigma^2), u -> [[0,0,alpha],[1,0,0],[0,1,0]].
Mat3<CycElt> to_matrix(const AlgElt& a);
/// Inverse of to_matrix; throws NotInImage for matrices outside the image.
AlgElt from_matrix(const Mat3<CycElt>& m, const CycElt& alpha = fpp::alpha());

/// Entrywise Galois action on a matrix.
Mat3<CycElt> apply_galois(const GaloisAuto& g, const Mat3<CycElt>& m);

struct TraceNormPair {
  CycElt trd;
  CycElt nrd;
};
TraceNormPair reduced_trace_norm(const AlgElt& a);

/// Inverse in D; throws NotInvertible when nrd(a) = 0.
AlgElt alg_inverse(const AlgElt& a);

/// iota: a -> conj(a) on L, u -> conj(alpha) u^2, extended anti-multiplicatively.
AlgElt canonical_involution(const AlgElt& a);
/// iota_b(x) = b iota(x) b^{-1}; b must be invertible and iota-invariant.
AlgElt twisted_involution(const AlgElt& x, const AlgElt& b);

/// b = tr(lambda) + lambda_bar u + lambda_bar u^2 with tr(lambda) = lambda + lambda_bar = -1.
AlgElt standard_b();

struct LocalNormData {
  KPrime prime;
  int valuation;
  int residue_degree;
  bool local_norm;
};

/// Outcome of the division test together with the local computation behind it.
struct DivisionWitness {
  bool is_division = false;
  std::vector<LocalNormData> places;
  std::vector<std::string> steps;
};

/// D(L, sigma, alpha) is a division algebra iff alpha is not a norm from L;
/// decided through valuations at primes of K unramified in L.
DivisionWitness is_division_algebra(const CycElt& alpha = fpp::alpha());

std::string to_string(const AlgElt& a);

}  // namespace fpp
