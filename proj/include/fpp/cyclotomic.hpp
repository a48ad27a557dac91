#pragma once

// Exact arithmetic in Q(zeta_N), power basis zeta^0..zeta^{phi(N)-1}.

#include <compare>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpp/exact_scalars.hpp"

namespace fpp {

int euler_phi(int n);

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<Int>& cyclotomic_polynomial(int n);

/// Element of Q(zeta_N).
///
/// Modulus 1 is Q itself; binary operations on different moduli promote both
/// operands to Q(zeta_lcm). Implicit construction from integers and rationals
/// lets dense matrix code build Scalar(0) and Scalar(1).
class CycElt {
 public:
  CycElt() : CycElt(Rat(0)) {}
  CycElt(int value) : CycElt(Rat(value)) {}  // NOLINT(google-explicit-constructor)
  CycElt(const Rat& value);                  // NOLINT(google-explicit-constructor)
  /// Arbitrary-length polynomial in zeta_N, reduced on construction.
  CycElt(int modulus, std::vector<Rat> poly);

  /// zeta_N^k for any integer k.
  static CycElt zeta(int modulus, long k = 1);

  int modulus() const { return modulus_; }
  std::span<const Rat> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRational unless the element lies in Q.
  Rat rational_value() const;

  /// Same element viewed in Q(zeta_M); requires modulus() | M.
  CycElt lift(int target_modulus) const;
  CycElt conj() const;
  /// Multiplicative inverse; throws DivisionByZero for 0.
  CycElt inverse() const;
  CycElt pow(long exponent) const;

  CycElt& operator+=(const CycElt& other);
  CycElt& operator-=(const CycElt& other);
  CycElt& operator*=(const CycElt& other);
  CycElt& operator/=(const CycElt& other);

  friend CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
  friend CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
  friend CycElt operator*(CycElt a, const CycElt& b) { return a *= b; }
  friend CycElt operator/(CycElt a, const CycElt& b) { return a /= b; }
  friend CycElt operator-(const CycElt& a);
  friend bool operator==(const CycElt& a, const CycElt& b);

  /// Double-precision complex value (diagnostics and float oracles only).
  std::complex<double> to_complex() const;

 private:
  CycElt(int modulus, std::vector<Rat> coeffs, bool already_reduced);
  int modulus_ = 1;
  std::vector<Rat> coeffs_;
};

inline bool is_zero(const CycElt& a) { return a.is_zero(); }

/// zeta_N -> zeta_N^exponent, gcd(exponent, N) = 1.
struct GaloisAuto {
  int modulus;
  int exponent;

  static GaloisAuto sigma() { return {7, 2}; }
  static GaloisAuto conjugation(int modulus) { return {modulus, modulus - 1}; }
  GaloisAuto compose(const GaloisAuto& other) const;
};

/// zeta_modulus^exponent, kept symbolic so that orders and types can be read off.
struct RootOfUnity {
  int modulus = 1;
  long exponent = 0;

  /// Same root with exponent reduced and modulus equal to its exact order.
  RootOfUnity normalized() const;
  int order() const { return normalized().modulus; }
  CycElt value() const { return CycElt::zeta(modulus, exponent); }
  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity pow(long k) const { return RootOfUnity{modulus, exponent * k}.normalized(); }
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

std::string to_string(const RootOfUnity& r);

/// Applies g; an element of a subfield Q(zeta_d), d | N, is lifted first.
CycElt apply_galois(const GaloisAuto& g, const CycElt& a);

/// Relative trace and norm of a in L = Q(zeta_7) down to K = Q(sqrt(-7)).
struct TraceNorm {
  CycElt trace;
  CycElt norm;
};
TraceNorm trace_norm_to_K(const CycElt& a);

/// N_{Q(zeta_N)/Q}(a): product over all phi(N) conjugates.
Rat rational_norm(const CycElt& a);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Mathematically exact sign of a real cyclotomic number.
///
/// Zero is detected structurally (the power-basis representation is
/// canonical); otherwise zeta_N is enclosed in certified rational boxes whose
/// precision doubles until the enclosure excludes zero. Throws NotReal if
/// conj(a) != a.
Sign exact_sign(const CycElt& a);

/// Certified enclosure of the real part of a.
RatInterval enclose_real_part(const CycElt& a, unsigned bits);

std::string to_string(const CycElt& a);
std::string to_string(Sign s);

// --- the core field L = Q(zeta_7) and its subfield K = Q(lambda) ----------

/// lambda = zeta + zeta^2 + zeta^4 = (-1 + sqrt(-7))/2.
CycElt lambda();
CycElt lambda_bar();
/// alpha = lambda / lambda_bar, the cyclic algebra's u^3.
CycElt alpha();

/// True iff a is fixed by sigma: zeta -> zeta^2, i.e. a lies in K.
bool in_K(const CycElt& a);
/// Coordinates (x, y) with a = x + y*lambda; throws NotInImage if a is not in K.
std::pair<Rat, Rat> to_K_coords(const CycElt& a);
CycElt from_K_coords(const Rat& x, const Rat& y);
/// N_{K/Q}(a) = a * conj(a) for a in K.
Rat norm_K_to_Q(const CycElt& a);

}  // namespace fpp
