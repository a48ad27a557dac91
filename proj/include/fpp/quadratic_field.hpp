#pragma once

// Primes and valuations of K = Q(sqrt(-7)), o_K = Z[lambda], lambda^2 + lambda + 2 = 0.

#include <string>
#include <vector>

#include "fpp/cyclotomic.hpp"

namespace fpp {

enum class Splitting { split, inert, ramified };

std::string to_string(Splitting s);

/// A prime ideal of o_K above the rational prime p.
///
/// For split p the prime is (p, lambda - root) where root is a residue of
/// x^2 + x + 2 mod p. At p = 2, root 0 is (lambda) and root 1 is (lambda_bar).
struct KPrime {
  Int p;
  Splitting splitting = Splitting::split;
  Int root = 0;

  Int norm() const { return splitting == Splitting::inert ? Int(p * p) : p; }
  std::string label() const;
  friend bool operator==(const KPrime&, const KPrime&) = default;
};

/// How the rational prime p decomposes in K.
Splitting splitting_of(const Int& p);
/// All primes of o_K above p.
std::vector<KPrime> primes_above(const Int& p);

/// v_P(a) for nonzero a in K.
int valuation(const KPrime& prime, const CycElt& a);

/// Residue degree of P in the cyclic cubic extension Q(zeta_7)/K; P must not lie over 7.
int residue_degree_in_L(const KPrime& prime);

/// Rational primes dividing the numerator or denominator of a nonzero rational.
std::vector<Int> prime_support(const Rat& q);

struct PrimePower {
  KPrime prime;
  int exponent;
};

/// Factorization of the fractional ideal (a) of o_K; a must be a nonzero element of K.
std::vector<PrimePower> factor_principal_ideal(const CycElt& a);
std::string to_string(const std::vector<PrimePower>& factorization);

/// True iff a in K lies in o_K = Z[lambda].
bool is_integral_in_K(const CycElt& a);

}  // namespace fpp
