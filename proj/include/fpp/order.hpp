#pragma once

// Orders in the cyclic algebra: discriminant, involution stability, torsion.

#include <map>
#include <string>
#include <vector>

#include "fpp/cyclic_algebra.hpp"

namespace fpp {

/// Nine elements forming an o_K-basis of an order, block-major: index 3k + i
/// holds zeta^i * c_k * u^k.
struct OrderBasis {
  std::string label;
  std::vector<AlgElt> elements;
};

/// O = o_L + o_L lambda_bar u + o_L lambda_bar u^2.
OrderBasis standard_order_basis();
/// o_L + o_L u + o_L u^2 (not an order: u^3 = alpha is not integral).
OrderBasis unscaled_order_basis();
/// Multiplies every element of block k (u^k) by `factor`.
OrderBasis scale_block(const OrderBasis& basis, int block, const CycElt& factor);

/// Factored discriminant ideal of o_K.
struct DiscriminantReport {
  CycElt determinant;
  Int ideal_norm;
  std::vector<PrimePower> factorization;
  /// exponent of (2) in the ideal (the common exponent at lambda and lambda_bar, -1 if unequal)
  int two_exponent = 0;
  bool equals_expected = false;  // ideal == (2^6)

  std::string ideal_string() const { return to_string(factorization); }
};

/// det(trd(x_i x_j)) over an o_K-basis given as matrices, as an o_K-ideal.
/// Throws BasisNotIntegral if some trace leaves o_K.
DiscriminantReport discriminant_of(const std::vector<Mat3<CycElt>>& basis);
DiscriminantReport discriminant(const OrderBasis& basis = standard_order_basis());
/// The matrix units E_ij of M_3(o_K); discriminant is the unit ideal.
std::vector<Mat3<CycElt>> matrix_unit_basis();

/// Coordinates of x over the Z-basis {x_i, lambda x_i}; throws NotInImage if x is outside the Q-span.
std::vector<Rat> z_coordinates(const OrderBasis& basis, const AlgElt& x);
bool in_order(const OrderBasis& basis, const AlgElt& x);

struct InvarianceReport {
  bool invariant = true;
  std::vector<std::size_t> failing;  // basis indices whose image leaves the lattice
  Int worst_denominator = 1;
};

bool is_closed_under_multiplication(const OrderBasis& basis);
InvarianceReport iota_invariance(const OrderBasis& basis);
/// iota_b applied to each basis element re-expanded over the basis.
/// Throws NotIotaInvariant / NotInvertible per the twisted involution's preconditions.
InvarianceReport iota_b_invariance(const OrderBasis& basis = standard_order_basis(),
                                   const AlgElt& b = standard_b());
bool is_iota_b_invariant(const OrderBasis& basis = standard_order_basis(), const AlgElt& b = standard_b());

struct TorsionReport {
  std::vector<int> allowed_orders;
  std::map<int, std::string> excluded;
};

/// Orders of torsion elements of reduced norm 1 in a degree-3 division algebra
/// with center Q(sqrt(center_discriminant)); center_discriminant is -7 or -4.
TorsionReport torsion_orders(int center_discriminant = -7);

/// (q^d - 1)/(q - 1).
Int congruence_index(const Int& residue_field_size, int algebra_degree);

/// True iff ideal_norm does not divide N(eta - 1) = Phi_k(1) for a primitive k-th root eta.
bool torsion_free_check(const Int& ideal_norm, int torsion_order);

}  // namespace fpp
