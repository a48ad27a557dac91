#include "fpp/exact_scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fpp {

namespace {

// pi to 125 decimals, rounded; |pi - kPiDigits| < 10^-124.
constexpr const char* kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803"
    "48253421170679821480865132823066470938";

Rat decimal_to_rat(const std::string& text) {
  auto dot = text.find('.');
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
  return make_rat(Int(digits), den);
}

Int pow2(unsigned bits) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
  return r;
}

Rat floor_to_grid(const Rat& x, unsigned bits) {
  Int scale = pow2(bits);
  Int n = x.get_num() * scale;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.get_den().get_mpz_t());
  return make_rat(q, scale);
}

Rat ceil_to_grid(const Rat& x, unsigned bits) {
  Int scale = pow2(bits);
  Int n = x.get_num() * scale;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.get_den().get_mpz_t());
  return make_rat(q, scale);
}

Rat pow7(int e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 7, static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rat(p) : make_rat(1, p);
}

int floor_div2(int b) { return b >= 0 ? b / 2 : -((-b + 1) / 2); }

int valuation7(const Int& n) {
  if (n == 0) return 0;
  Int m = abs(n);
  int v = 0;
  while (m % 7 == 0) {
    m /= 7;
    ++v;
  }
  return v;
}

RatInterval pow_interval(const RatInterval& base, int exponent, unsigned bits) {
  RatInterval b = exponent < 0 ? base.inverse() : base;
  RatInterval acc(Rat(1));
  for (int i = 0; i < std::abs(exponent); ++i) {
    acc = acc * b;
    acc.round_out(bits);
  }
  return acc;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return i < s.size() && std::all_of(s.begin() + i, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (num.starts_with('+')) num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) throw ConfigError("malformed rational: '" + text + "'");
  Int d(den);
  if (d == 0) throw ConfigError("zero denominator: '" + text + "'");
  return make_rat(Int(num), d);
}

std::string to_string(const Rat& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

RatInterval::RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval& RatInterval::round_out(unsigned bits) {
  lo_ = floor_to_grid(lo_, bits);
  hi_ = ceil_to_grid(hi_, bits);
  return *this;
}

RatInterval RatInterval::inverse() const {
  if (contains_zero()) throw DivisionByZero("interval reciprocal straddles zero");
  return RatInterval(1 / hi_, 1 / lo_);
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi_, -a.lo_); }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return RatInterval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

RatInterval pi_interval(unsigned bits) {
  if (bits > kMaxCertifiedBits) throw Unsupported("pi constant cannot certify more than 400 bits");
  static const Rat center = decimal_to_rat(kPiDigits);
  static const Rat radius = make_rat(1, Int("1" + std::string(124, '0')));
  RatInterval r(center - radius, center + radius);
  return r.round_out(bits);
}

RatInterval sqrt7_interval(unsigned bits) {
  Int scaled = 7 * pow2(2 * bits);
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Int scale = pow2(bits);
  return RatInterval(make_rat(root, scale), make_rat(root + 1, scale));
}

std::string FloatApprox::to_decimal(int digits) const {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rat scaled = abs(value) * scale + Rat(1, 2);
  Int n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (sgn(value) < 0 ? "-" : "") + s;
}

// ---------------------------------------------------------------------------

SymbolicReal::SymbolicReal(const Rat& q) {
  if (!fpp::is_zero(q)) terms_.emplace(Key{0, 0}, q);
}

SymbolicReal SymbolicReal::monomial(const Rat& coeff, int pi_power, int seven_half_power) {
  SymbolicReal r;
  int e = floor_div2(seven_half_power);
  r.add_term(Key{pi_power, seven_half_power - 2 * e}, coeff * pow7(e));
  return r;
}

void SymbolicReal::add_term(Key key, const Rat& coeff) {
  if (fpp::is_zero(coeff)) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (fpp::is_zero(it->second)) terms_.erase(it);
  }
}

SymbolicReal SymbolicReal::inverse() const {
  if (!is_monomial()) throw Unsupported("inverse of a non-monomial symbolic real");
  const auto& [key, coeff] = *terms_.begin();
  // (q * 7^{b/2})^{-1} = q^{-1} * 7^{-b/2}
  return monomial(1 / coeff, -key.pi_power, -key.seven_half_power);
}

SymbolicReal SymbolicReal::pow(int exponent) const {
  SymbolicReal base = exponent < 0 ? inverse() : *this;
  SymbolicReal acc(Rat(1));
  for (int i = 0; i < std::abs(exponent); ++i) acc = acc * base;
  return acc;
}

SymbolicReal operator+(const SymbolicReal& x, const SymbolicReal& y) {
  SymbolicReal r = x;
  for (const auto& [k, q] : y.terms_) r.add_term(k, q);
  return r;
}

SymbolicReal operator-(const SymbolicReal& x) {
  SymbolicReal r;
  for (const auto& [k, q] : x.terms_) r.terms_.emplace(k, -q);
  return r;
}

SymbolicReal operator-(const SymbolicReal& x, const SymbolicReal& y) { return x + (-y); }

SymbolicReal operator*(const SymbolicReal& x, const SymbolicReal& y) {
  SymbolicReal r;
  for (const auto& [kx, qx] : x.terms_) {
    for (const auto& [ky, qy] : y.terms_) {
      r = r + SymbolicReal::monomial(qx * qy, kx.pi_power + ky.pi_power,
                                     kx.seven_half_power + ky.seven_half_power);
    }
  }
  return r;
}

SymbolicReal sr_add(const SymbolicReal& x, const SymbolicReal& y) { return x + y; }
SymbolicReal sr_mul(const SymbolicReal& x, const SymbolicReal& y) { return x * y; }

Rat sr_as_rational(const SymbolicReal& x) {
  Rat sum = 0;
  for (const auto& [key, coeff] : x.terms()) {
    if (key.pi_power != 0 || key.seven_half_power != 0)
      throw NotRational("symbolic real has a surviving pi or sqrt(7) factor: " + to_string(x));
    sum += coeff;
  }
  return sum;
}

RatInterval sr_enclose(const SymbolicReal& x, unsigned bits) {
  RatInterval pi = pi_interval(bits);
  RatInterval s7 = sqrt7_interval(bits);
  RatInterval sum(Rat(0));
  for (const auto& [key, coeff] : x.terms()) {
    RatInterval term(coeff);
    if (key.pi_power != 0) term = term * pow_interval(pi, key.pi_power, bits);
    if (key.seven_half_power != 0) term = term * s7;
    sum = sum + term.round_out(bits);
  }
  return sum;
}

FloatApprox sr_to_float(const SymbolicReal& x, int precision_bits) {
  if (precision_bits < 32 || precision_bits > 360)
    throw std::invalid_argument("sr_to_float: precision_bits must lie in [32, 360]");
  if (x.is_zero()) return {Rat(0), Rat(0)};
  Rat tolerance = make_rat(1, pow2(static_cast<unsigned>(precision_bits)));
  for (unsigned work = static_cast<unsigned>(precision_bits) + 16; work <= kMaxCertifiedBits; work += 16) {
    RatInterval enc = sr_enclose(x, work);
    if (enc.contains_zero()) continue;
    Rat magnitude = std::min(abs(enc.lo()), abs(enc.hi()));
    Rat half_width = enc.width() / 2;
    if (half_width <= tolerance * magnitude) return {enc.midpoint(), half_width};
  }
  throw Unsupported("sr_to_float: could not certify the requested precision");
}

std::string to_string(const SymbolicReal& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : x.terms()) {
    Rat q = coeff;
    int half = key.seven_half_power;
    if (half != 0) {
      int v = valuation7(q.get_num()) - valuation7(q.get_den());
      q /= pow7(v);
      half += 2 * v;
    }
    if (first) {
      if (sgn(q) < 0) out << "-";
    } else {
      out << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    Rat mag = abs(q);
    bool have_factor = false;
    if (mag != 1 || (half == 0 && key.pi_power == 0)) {
      out << to_string(mag);
      have_factor = true;
    }
    if (half != 0) {
      out << (have_factor ? "*" : "") << "7^(" << half << "/2)";
      have_factor = true;
    }
    if (key.pi_power != 0) {
      out << (have_factor ? "*" : "") << "pi";
      if (key.pi_power != 1) out << "^" << key.pi_power;
    }
  }
  return out.str();
}

}  // namespace fpp
