#include "fpp/lfunctions.hpp"

#include <mutex>

#include <mpfr.h>

namespace fpp {

namespace {

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool squarefree(long n) {
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

bool is_fundamental(long d) {
  if (d == 1) return true;
  long m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return squarefree(d);
  if (m4 != 0) return false;
  long m = d / 4;
  long mm = ((m % 4) + 4) % 4;
  return (mm == 2 || mm == 3) && squarefree(m);
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ~Mpfr() { mpfr_clear(x_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

}  // namespace

Rat bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: n must be nonnegative");
  static std::mutex mutex;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard lock(mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  while (static_cast<int>(cache.size()) <= n) {
    const auto m = static_cast<unsigned long>(cache.size());
    Rat sum = 0;
    for (unsigned long k = 0; k < m; ++k) sum += Rat(binomial(m + 1, k)) * cache[k];
    cache.push_back(-sum / Rat(binomial(m + 1, m)));
  }
  return cache[static_cast<std::size_t>(n)];
}

std::vector<Rat> bernoulli_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_polynomial: n must be nonnegative");
  std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    coeffs[static_cast<std::size_t>(n - k)] =
        Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) * bernoulli_number(k);
  return coeffs;
}

Rat evaluate(const std::vector<Rat>& poly, const Rat& x) {
  Rat acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DirichletCharacter DirichletCharacter::from_discriminant(long d) {
  if (!is_fundamental(d)) throw NotPrimitive("not a fundamental discriminant: " + std::to_string(d));
  DirichletCharacter chi;
  chi.discriminant_ = d;
  const long f = std::labs(d);
  chi.values_.resize(static_cast<std::size_t>(f));
  for (long a = 0; a < f; ++a) {
    Int D(d), A(a);
    chi.values_[static_cast<std::size_t>(a)] = f == 1 ? 1 : mpz_kronecker(D.get_mpz_t(), A.get_mpz_t());
  }
  return chi;
}

int DirichletCharacter::operator()(long a) const {
  const long f = modulus();
  return values_[static_cast<std::size_t>(((a % f) + f) % f)];
}

Rat generalized_bernoulli(int n, const DirichletCharacter& chi) {
  if (n < 1) throw std::invalid_argument("generalized_bernoulli: n must be positive");
  const long f = chi.modulus();
  if (f == 1 && n == 1) return bernoulli_number(1);
  const auto poly = bernoulli_polynomial(n);
  Rat sum = 0;
  for (long a = 1; a <= f; ++a)
    if (int c = chi(a); c != 0) sum += c * evaluate(poly, make_rat(a, f));
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(f), static_cast<unsigned long>(n - 1));
  return sum * scale;
}

SymbolicReal symbolic_sqrt(const Int& n) {
  if (n <= 0) throw std::invalid_argument("symbolic_sqrt: n must be positive");
  Int m = n;
  int e = 0;
  while (m % 7 == 0) {
    m /= 7;
    ++e;
  }
  Int root;
  if (!mpz_perfect_square_p(m.get_mpz_t())) throw Unsupported("sqrt(" + n.get_str() + ") is outside Q(sqrt(7))");
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  return SymbolicReal::monomial(Rat(root), 0, e);
}

SymbolicReal dirichlet_L_value(int n, const DirichletCharacter& chi) {
  if (n < 1) throw std::invalid_argument("dirichlet_L_value: n must be positive");
  const int a = chi.is_odd() ? 1 : 0;
  if ((n - a) % 2 != 0) throw ParityMismatch("chi(-1) != (-1)^n: closed form unavailable");
  if (chi.modulus() == 1 && n == 1) throw Unsupported("zeta has a pole at 1");
  const long f = chi.modulus();
  // L(n, chi) = (-1)^{1 + (n - a)/2} (sqrt f / 2) (2 pi / f)^n B_{n,chi} / n!
  const int sign = ((1 + (n - a) / 2) % 2 == 0) ? 1 : -1;
  Int two_n, f_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  mpz_ui_pow_ui(f_n.get_mpz_t(), static_cast<unsigned long>(f), static_cast<unsigned long>(n));
  Rat coeff = sign * generalized_bernoulli(n, chi) * Rat(two_n) / (2 * Rat(f_n) * Rat(factorial(static_cast<unsigned long>(n))));
  SymbolicReal value = SymbolicReal::monomial(coeff, n, 0) * symbolic_sqrt(Int(f));
  if (n > 1 && sgn(sr_enclose(value, 64).lo()) <= 0)
    throw std::logic_error("dirichlet_L_value: Euler product value must be positive");
  return value;
}

SymbolicReal riemann_zeta(int n) { return dirichlet_L_value(n, DirichletCharacter::from_discriminant(1)); }

SeriesEstimate l_series_oracle(int n, const DirichletCharacter& chi, long terms) {
  if (n < 1 || terms < 10) throw std::invalid_argument("l_series_oracle: need n >= 1 and terms >= 10");
  if (n == 1 && chi.modulus() == 1) throw std::invalid_argument("l_series_oracle: zeta(1) diverges");
  constexpr mpfr_prec_t kPrec = 128;
  Mpfr sum(kPrec), term(kPrec);
  mpfr_set_ui(sum.get(), 0, MPFR_RNDN);
  long partial = 0, max_partial = 0;
  for (long m = 1; m <= terms; ++m) {
    int c = chi(m);
    partial += c;
    max_partial = std::max(max_partial, std::labs(partial));
    if (c == 0) continue;
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
    for (int k = 0; k < n; ++k) mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(m), MPFR_RNDN);
    if (c > 0)
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    else
      mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  SeriesEstimate est;
  est.terms = terms;
  mpfr_get_q(est.partial_sum.get_mpq_t(), sum.get());
  // each of the n divisions and the addition perturbs by at most 2^-kPrec relative;
  // all terms and partial sums are bounded by 2 in absolute value.
  Int ulp;
  mpz_ui_pow_ui(ulp.get_mpz_t(), 2, kPrec - 2);
  est.rounding_bound = make_rat(Int(terms) * (n + 2), ulp);
  if (n >= 2) {
    Int denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(terms), static_cast<unsigned long>(n - 1));
    est.tail_bound = make_rat(1, denom * (n - 1));
  } else {
    est.tail_bound = make_rat(2 * max_partial, terms + 1);
  }
  return est;
}

Rat VolumeInput::local_factor_product() const {
  Rat p = 1;
  for (const auto& [place, e] : local_factors) p *= e;
  return p;
}

VolumeInput default_volume_input() {
  VolumeInput v;
  v.zeta_value = riemann_zeta(2);
  v.l_value = dirichlet_L_value(3, DirichletCharacter::from_discriminant(-7));
  v.local_factors = {{"2", Rat(3)}, {"7", Rat(1)}};
  return v;
}

SymbolicReal printed_l_value() { return SymbolicReal::monomial(Rat(-7, 8), 3, -5); }

SymbolicReal covolume_symbolic(const VolumeInput& v) {
  if (v.D_F != 1 || v.field_degree != 1) throw Unsupported("covolume: only F = Q is supported");
  if (v.local_factors.empty()) throw std::invalid_argument("covolume: local factors missing");
  SymbolicReal dk_52 = SymbolicReal(Rat(v.D_K * v.D_K)) * symbolic_sqrt(v.D_K);
  SymbolicReal inv_16pi5 = SymbolicReal::monomial(Rat(1, 16), -5, 0);
  return SymbolicReal(3 * v.local_factor_product() / Rat(v.D_F)) * dk_52 * inv_16pi5 * v.zeta_value * v.l_value;
}

Rat covolume(const VolumeInput& v) { return sr_as_rational(covolume_symbolic(v)); }

Rat euler_number_of_cover(const Rat& covolume, long index) {
  if (index < 1) throw std::invalid_argument("euler_number_of_cover: index must be positive");
  return covolume * index;
}

}  // namespace fpp
