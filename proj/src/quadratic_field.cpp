#include "fpp/quadratic_field.hpp"

#include <algorithm>
#include <sstream>

namespace fpp {

namespace {

int valuation_p(Int n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation_p(const Rat& q, const Int& p) { return valuation_p(q.get_num(), p) - valuation_p(q.get_den(), p); }

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Root of x^2 + x + 2 modulo p^k lifting `root` (f'(x) = 2x + 1 is a unit mod p).
Int hensel_root(const Int& p, const Int& root, int k) {
  Int r = root;
  Int modulus = p;
  for (int i = 1; i < k; ++i) {
    modulus *= p;
    Int f = r * r + r + 2;
    Int df = 2 * r + 1;
    Int inv;
    mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), modulus.get_mpz_t());
    r = mod_pos(r - f * inv, modulus);
  }
  return r;
}

// Integral coordinates: a = (X + Y*lambda) / d with d > 0.
struct Integral {
  Int x, y, d;
};

Integral clear_denominators(const CycElt& a) {
  auto [x, y] = to_K_coords(a);
  Int d;
  mpz_lcm(d.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
  Rat X = x * d;
  Rat Y = y * d;
  return {X.get_num(), Y.get_num(), d};
}

}  // namespace

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::ramified: return "ramified";
  }
  return "?";
}

std::string KPrime::label() const {
  if (splitting == Splitting::ramified) return "(sqrt(-7))";
  if (splitting == Splitting::inert) return "(" + p.get_str() + ")";
  if (p == 2) return root == 0 ? "(lambda)" : "(lambda_bar)";
  return "(" + p.get_str() + ", lambda - " + root.get_str() + ")";
}

Splitting splitting_of(const Int& p) {
  if (p == 7) return Splitting::ramified;
  if (p == 2) return Splitting::split;
  Int r = mod_pos(p, 7);
  return (r == 1 || r == 2 || r == 4) ? Splitting::split : Splitting::inert;
}

std::vector<KPrime> primes_above(const Int& p) {
  Splitting s = splitting_of(p);
  if (s != Splitting::split) return {KPrime{p, s, 0}};
  std::vector<KPrime> out;
  for (Int r = 0; r < p && out.size() < 2; ++r)
    if (mod_pos(r * r + r + 2, p) == 0) out.push_back(KPrime{p, s, r});
  return out;
}

int valuation(const KPrime& prime, const CycElt& a) {
  if (a.is_zero()) throw std::invalid_argument("valuation of zero");
  const Rat norm = norm_K_to_Q(a);
  switch (prime.splitting) {
    case Splitting::ramified: return valuation_p(norm, prime.p);
    case Splitting::inert: return valuation_p(norm, prime.p) / 2;
    case Splitting::split: break;
  }
  Integral c = clear_denominators(a);
  int g = std::min(c.x == 0 ? 1 << 20 : valuation_p(c.x, prime.p), c.y == 0 ? 1 << 20 : valuation_p(c.y, prime.p));
  Int pg;
  mpz_pow_ui(pg.get_mpz_t(), prime.p.get_mpz_t(), static_cast<unsigned long>(g));
  Int x = c.x / pg;
  Int y = c.y / pg;
  // x + y*lambda is now primitive at p, so at most one of the two primes divides it.
  Int n = x * x - x * y + 2 * y * y;
  int k = valuation_p(n, prime.p);
  int v = 0;
  if (k > 0) {
    Int r = hensel_root(prime.p, prime.root, k + 1);
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), prime.p.get_mpz_t(), static_cast<unsigned long>(k + 1));
    Int t = mod_pos(x + y * r, pk);
    v = t == 0 ? k + 1 : valuation_p(t, prime.p);
    v = std::min(v, k);
  }
  return g + v - valuation_p(c.d, prime.p);
}

int residue_degree_in_L(const KPrime& prime) {
  if (prime.p == 7) throw std::invalid_argument("residue_degree_in_L: 7 ramifies in L/K");
  int order = 1;
  Int pw = mod_pos(prime.p, 7);
  while (pw != 1) {
    pw = mod_pos(pw * prime.p, 7);
    ++order;
  }
  return prime.splitting == Splitting::inert ? order / 2 : order;
}

std::vector<Int> prime_support(const Rat& q) {
  if (is_zero(q)) throw std::invalid_argument("prime_support of zero");
  std::vector<Int> out;
  for (Int n : {Int(abs(q.get_num())), Int(q.get_den())}) {
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimePower> factor_principal_ideal(const CycElt& a) {
  std::vector<PrimePower> out;
  for (const Int& p : prime_support(norm_K_to_Q(a)))
    for (const KPrime& prime : primes_above(p))
      if (int v = valuation(prime, a); v != 0) out.push_back({prime, v});
  return out;
}

std::string to_string(const std::vector<PrimePower>& factorization) {
  if (factorization.empty()) return "(1)";
  std::ostringstream out;
  for (std::size_t i = 0; i < factorization.size(); ++i) {
    if (i > 0) out << "*";
    out << factorization[i].prime.label();
    if (factorization[i].exponent != 1) out << "^" << factorization[i].exponent;
  }
  return out.str();
}

bool is_integral_in_K(const CycElt& a) {
  auto [x, y] = to_K_coords(a);
  return is_integer(x) && is_integer(y);
}

}  // namespace fpp
