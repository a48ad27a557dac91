#pragma once

// Exact rationals, certified rational intervals, and the symbolic reals
// q * pi^a * 7^(b/2) that carry every volume and L-value computation.

#include <compare>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "fpp/errors.hpp"

namespace fpp {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in lowest terms. Throws DivisionByZero on den == 0.
Rat make_rat(const Int& num, const Int& den = 1);

/// Parses "p", "-p/q" (decimal big integers). Throws ConfigError on malformed input.
Rat parse_rat(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Closed interval [lo, hi] with rational endpoints.
///
/// Arithmetic is exact; `round_out` snaps both endpoints outward to the dyadic
/// grid 2^-bits so that long evaluation chains keep small denominators.
class RatInterval {
 public:
  RatInterval() = default;
  explicit RatInterval(const Rat& point) : lo_(point), hi_(point) {}
  RatInterval(Rat lo, Rat hi);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const { return (lo_ + hi_) / 2; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }

  RatInterval& round_out(unsigned bits);
  /// Reciprocal; throws DivisionByZero when the interval contains 0.
  RatInterval inverse() const;

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator-(const RatInterval& a);
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b);

 private:
  Rat lo_{0};
  Rat hi_{0};
};

/// Certified enclosure of pi. Valid for bits <= kMaxCertifiedBits.
RatInterval pi_interval(unsigned bits);
/// Certified enclosure of sqrt(7) with width 2^-bits.
RatInterval sqrt7_interval(unsigned bits);

/// Largest precision the hard-coded pi constant can certify.
inline constexpr unsigned kMaxCertifiedBits = 400;

/// Decimal approximation with a guaranteed absolute error bound.
struct FloatApprox {
  Rat value;
  Rat error_bound;

  double to_double() const { return value.get_d(); }
  std::string to_decimal(int digits) const;
};

/// Exact real of the form sum_i q_i * pi^{a_i} * 7^{b_i/2}.
///
/// Canonical form: the 7-half exponent of every key is 0 or 1, integral powers
/// of 7 live in the rational coefficient, and zero coefficients are never
/// stored. Equality is therefore structural.
class SymbolicReal {
 public:
  struct Key {
    int pi_power = 0;
    int seven_half_power = 0;  // 0 or 1 once normalized
    auto operator<=>(const Key&) const = default;
  };
  using Terms = std::map<Key, Rat>;

  SymbolicReal() = default;
  explicit SymbolicReal(const Rat& q);

  /// coeff * pi^pi_power * 7^(seven_half_power/2) for any integer exponents.
  static SymbolicReal monomial(const Rat& coeff, int pi_power, int seven_half_power);
  static SymbolicReal pi(int power = 1) { return monomial(1, power, 0); }
  static SymbolicReal sqrt7(int half_power = 1) { return monomial(1, 0, half_power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Inverse of a single nonzero term; throws Unsupported for sums.
  SymbolicReal inverse() const;
  SymbolicReal pow(int exponent) const;

  friend SymbolicReal operator+(const SymbolicReal& x, const SymbolicReal& y);
  friend SymbolicReal operator-(const SymbolicReal& x, const SymbolicReal& y);
  friend SymbolicReal operator-(const SymbolicReal& x);
  friend SymbolicReal operator*(const SymbolicReal& x, const SymbolicReal& y);
  friend bool operator==(const SymbolicReal&, const SymbolicReal&) = default;

 private:
  void add_term(Key key, const Rat& coeff);
  Terms terms_;
};

SymbolicReal sr_add(const SymbolicReal& x, const SymbolicReal& y);
SymbolicReal sr_mul(const SymbolicReal& x, const SymbolicReal& y);

/// Exact rational value; throws NotRational if any pi or sqrt(7) survives.
Rat sr_as_rational(const SymbolicReal& x);

/// Relative error at most 2^-precision_bits. Requires 32 <= precision_bits <= 360.
FloatApprox sr_to_float(const SymbolicReal& x, int precision_bits);

/// Enclosure of x at working precision `bits`.
RatInterval sr_enclose(const SymbolicReal& x, unsigned bits);

/// Term syntax, e.g. "32*7^(-7/2)*pi^3" or "1/6*pi^2 + 3/7".
std::string to_string(const SymbolicReal& x);

}  // namespace fpp
