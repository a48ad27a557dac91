#include "fpp/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace fpp {

namespace {

struct FieldData {
  int n = 1;
  int phi = 1;
  std::vector<Int> poly;
  // Reduction of x^j modulo Phi_n for j in [0, n).
  std::vector<std::vector<Int>> power_reduction;
};

std::vector<Int> poly_divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<Int> quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    Int c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

std::unique_ptr<FieldData> build_field(int n) {
  auto data = std::make_unique<FieldData>();
  data->n = n;
  data->phi = euler_phi(n);
  data->poly = cyclotomic_polynomial(n);
  const int phi = data->phi;
  std::vector<Int> cur(static_cast<std::size_t>(phi), 0);
  cur[0] = 1;
  for (int j = 0; j < n; ++j) {
    data->power_reduction.push_back(cur);
    // multiply by x and fold x^phi = -sum poly[i] x^i
    Int top = cur[static_cast<std::size_t>(phi - 1)];
    for (int i = phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] -= top * data->poly[static_cast<std::size_t>(i)];
  }
  return data;
}

const FieldData& field_data(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_field(n);
  return *slot;
}

std::vector<Rat> reduce(const FieldData& f, const std::vector<Rat>& poly) {
  std::vector<Rat> out(static_cast<std::size_t>(f.phi), Rat(0));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (is_zero(poly[i])) continue;
    const auto& red = f.power_reduction[i % static_cast<std::size_t>(f.n)];
    for (std::size_t j = 0; j < red.size(); ++j)
      if (red[j] != 0) out[j] += poly[i] * red[j];
  }
  return out;
}

long mod_floor(long a, long m) { return ((a % m) + m) % m; }

struct ComplexInterval {
  RatInterval re;
  RatInterval im;
};

ComplexInterval mul(const ComplexInterval& a, const ComplexInterval& b, unsigned bits) {
  ComplexInterval r{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  r.re.round_out(bits);
  r.im.round_out(bits);
  return r;
}

// cos and sin of theta in [0, 2*pi] by Taylor series with Lagrange remainder.
ComplexInterval unit_circle(const RatInterval& theta, unsigned bits) {
  Rat bound = theta.hi();
  RatInterval c(Rat(1)), s(Rat(0));
  RatInterval power(Rat(1));
  Int fact = 1;
  Rat tol = make_rat(1, Int(1) << bits);
  Rat remainder = 1;
  for (unsigned m = 1;; ++m) {
    power = power * theta;
    power.round_out(bits + 8);
    fact *= m;
    RatInterval term = power * RatInterval(make_rat(1, fact));
    term.round_out(bits + 8);
    switch (m % 4) {
      case 0: c = c + term; break;
      case 1: s = s + term; break;
      case 2: c = c - term; break;
      case 3: s = s - term; break;
    }
    // |remainder| after degree m is at most bound^{m+1}/(m+1)!
    remainder = remainder * bound / m;
    Rat next = remainder * bound / (m + 1);
    if (m > 2 * static_cast<unsigned>(bound.get_d()) + 4 && next < tol) {
      RatInterval err(-next, next);
      return {c + err, s + err};
    }
  }
}

ComplexInterval zeta_enclosure(int n, unsigned bits) {
  RatInterval theta = pi_interval(bits + 16) * RatInterval(make_rat(2, n));
  return unit_circle(theta, bits + 16);
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Int>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Int>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::vector<Int> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_divide_monic(num, cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(num)).first->second;
}

// ---------------------------------------------------------------------------

CycElt::CycElt(const Rat& value) : modulus_(1), coeffs_{value} {}

CycElt::CycElt(int modulus, std::vector<Rat> poly) {
  if (modulus < 1) throw std::invalid_argument("CycElt: modulus must be positive");
  modulus_ = modulus;
  coeffs_ = reduce(field_data(modulus), poly);
}

CycElt::CycElt(int modulus, std::vector<Rat> coeffs, bool) : modulus_(modulus), coeffs_(std::move(coeffs)) {}

CycElt CycElt::zeta(int modulus, long k) {
  std::vector<Rat> poly(static_cast<std::size_t>(mod_floor(k, modulus)) + 1, Rat(0));
  poly.back() = 1;
  return CycElt(modulus, std::move(poly));
}

bool CycElt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& q) { return fpp::is_zero(q); });
}

bool CycElt::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& q) { return fpp::is_zero(q); });
}

Rat CycElt::rational_value() const {
  if (!is_rational()) throw NotRational("cyclotomic element is not rational: " + to_string(*this));
  return coeffs_[0];
}

CycElt CycElt::lift(int target) const {
  if (target == modulus_) return *this;
  if (target % modulus_ != 0) throw std::invalid_argument("CycElt::lift: modulus does not divide target");
  const long step = target / modulus_;
  std::vector<Rat> poly(static_cast<std::size_t>(target), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    poly[static_cast<std::size_t>((static_cast<long>(i) * step) % target)] += coeffs_[i];
  return CycElt(target, std::move(poly));
}

CycElt CycElt::conj() const { return apply_galois(GaloisAuto::conjugation(modulus_), *this); }

CycElt CycElt::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(modulus_) + ")");
  if (is_rational()) return CycElt(1 / coeffs_[0]);
  // a^{-1} = (product of the other conjugates) / N(a)
  CycElt others(1);
  for (int k = 2; k < modulus_; ++k)
    if (std::gcd(k, modulus_) == 1) others *= apply_galois({modulus_, k}, *this);
  Rat norm = (others * *this).rational_value();
  return others * CycElt(1 / norm);
}

CycElt CycElt::pow(long exponent) const {
  CycElt base = exponent < 0 ? inverse() : *this;
  CycElt acc(1);
  for (long e = std::abs(exponent); e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

CycElt& CycElt::operator+=(const CycElt& other) {
  if (other.modulus_ != modulus_) {
    int m = std::lcm(modulus_, other.modulus_);
    *this = lift(m);
    return *this += other.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycElt& CycElt::operator-=(const CycElt& other) { return *this += -other; }

CycElt& CycElt::operator*=(const CycElt& other) {
  if (other.modulus_ != modulus_) {
    int m = std::lcm(modulus_, other.modulus_);
    *this = lift(m);
    return *this *= other.lift(m);
  }
  if (modulus_ <= 2) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  std::vector<Rat> prod(2 * coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (fpp::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      if (!fpp::is_zero(other.coeffs_[j])) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = reduce(field_data(modulus_), prod);
  return *this;
}

CycElt& CycElt::operator/=(const CycElt& other) { return *this *= other.inverse(); }

CycElt operator-(const CycElt& a) {
  std::vector<Rat> c(a.coeffs_.begin(), a.coeffs_.end());
  for (auto& q : c) q = -q;
  return CycElt(a.modulus_, std::move(c), true);
}

bool operator==(const CycElt& a, const CycElt& b) {
  if (a.modulus_ == b.modulus_) return a.coeffs_ == b.coeffs_;
  int m = std::lcm(a.modulus_, b.modulus_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::complex<double> CycElt::to_complex() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum += coeffs_[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / modulus_);
  return sum;
}

// ---------------------------------------------------------------------------

RootOfUnity RootOfUnity::normalized() const {
  if (modulus < 1) throw std::invalid_argument("RootOfUnity: modulus must be positive");
  long e = mod_floor(exponent, modulus);
  long g = std::gcd(e, static_cast<long>(modulus));
  if (e == 0) return {1, 0};
  return {static_cast<int>(modulus / g), e / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  int m = std::lcm(modulus, other.modulus);
  return RootOfUnity{m, exponent * (m / modulus) + other.exponent * (m / other.modulus)}.normalized();
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  RootOfUnity x = a.normalized(), y = b.normalized();
  return x.modulus == y.modulus && x.exponent == y.exponent;
}

std::string to_string(const RootOfUnity& r) {
  return "zeta_" + std::to_string(r.modulus) + "^" + std::to_string(r.exponent);
}

// ---------------------------------------------------------------------------

GaloisAuto GaloisAuto::compose(const GaloisAuto& other) const {
  return {modulus, static_cast<int>((static_cast<long>(exponent) * other.exponent) % modulus)};
}

CycElt apply_galois(const GaloisAuto& g, const CycElt& a) {
  if (std::gcd(g.exponent, g.modulus) != 1) throw std::invalid_argument("apply_galois: exponent not a unit");
  CycElt x = a.modulus() == g.modulus ? a : a.lift(g.modulus);
  std::vector<Rat> poly(static_cast<std::size_t>(g.modulus), Rat(0));
  auto c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    poly[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * g.exponent, g.modulus))] += c[i];
  return CycElt(g.modulus, std::move(poly));
}

TraceNorm trace_norm_to_K(const CycElt& a) {
  CycElt x = a.lift(7);
  CycElt s1 = apply_galois(GaloisAuto::sigma(), x);
  CycElt s2 = apply_galois(GaloisAuto::sigma(), s1);
  return {x + s1 + s2, x * s1 * s2};
}

Rat rational_norm(const CycElt& a) {
  CycElt prod(1);
  for (int k = 1; k < a.modulus() || k == 1; ++k)
    if (std::gcd(k, a.modulus()) == 1) prod *= apply_galois({a.modulus(), k}, a);
  return prod.rational_value();
}

RatInterval enclose_real_part(const CycElt& a, unsigned bits) {
  ComplexInterval z = zeta_enclosure(a.modulus(), bits);
  ComplexInterval power{RatInterval(Rat(1)), RatInterval(Rat(0))};
  RatInterval sum(Rat(0));
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) power = mul(power, z, bits + 16);
    if (!is_zero(c[i])) sum = sum + power.re * RatInterval(c[i]);
  }
  return sum.round_out(bits + 16);
}

Sign exact_sign(const CycElt& a) {
  if (!(a.conj() == a)) throw NotReal("exact_sign: element is not real: " + to_string(a));
  if (a.is_zero()) return Sign::zero;
  if (a.is_rational()) return sgn(a.rational_value()) > 0 ? Sign::positive : Sign::negative;
  for (unsigned bits = 48; bits <= kMaxCertifiedBits - 32; bits *= 2) {
    RatInterval enc = enclose_real_part(a, bits);
    if (sgn(enc.lo()) > 0) return Sign::positive;
    if (sgn(enc.hi()) < 0) return Sign::negative;
  }
  throw Unsupported("exact_sign: element too close to zero for the certified pi constant");
}

std::string to_string(const CycElt& a) {
  std::ostringstream out;
  bool first = true;
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    Rat q = c[i];
    if (first) {
      if (sgn(q) < 0) out << "-";
    } else {
      out << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    Rat mag = abs(q);
    if (i == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  if (!a.is_rational()) out << " [z=zeta_" << a.modulus() << "]";
  return out.str();
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

// ---------------------------------------------------------------------------

CycElt lambda() {
  static const CycElt value = CycElt::zeta(7, 1) + CycElt::zeta(7, 2) + CycElt::zeta(7, 4);
  return value;
}

CycElt lambda_bar() {
  static const CycElt value = lambda().conj();
  return value;
}

CycElt alpha() {
  static const CycElt value = lambda() / lambda_bar();
  return value;
}

bool in_K(const CycElt& a) {
  if (7 % a.modulus() != 0) return false;
  CycElt x = a.lift(7);
  return apply_galois(GaloisAuto::sigma(), x) == x;
}

std::pair<Rat, Rat> to_K_coords(const CycElt& a) {
  if (!in_K(a)) throw NotInImage("element is not in K = Q(sqrt(-7)): " + to_string(a));
  CycElt x = a.lift(7);
  Rat re = x.coeffs()[0];
  Rat im = x.coeffs()[1];
  return {re, im};
}

CycElt from_K_coords(const Rat& x, const Rat& y) { return CycElt(x) + CycElt(y) * lambda(); }

Rat norm_K_to_Q(const CycElt& a) {
  if (!in_K(a)) throw NotInImage("norm_K_to_Q: element is not in K");
  return (a * a.conj()).rational_value();
}

}  // namespace fpp
