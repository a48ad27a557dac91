#include "fpp/cyclic_algebra.hpp"

#include <sstream>

namespace fpp {

namespace {

const GaloisAuto kSigma = GaloisAuto::sigma();
const GaloisAuto kSigmaInv{7, 4};

CycElt sigma_pow(const CycElt& a, int k) {
  CycElt r = a.lift(7);
  for (int i = 0; i < ((k % 3) + 3) % 3; ++i) r = apply_galois(kSigma, r);
  return r;
}

void require_same_algebra(const AlgElt& a, const AlgElt& b) {
  if (!(a.alpha() == b.alpha())) throw std::invalid_argument("AlgElt: operands live in different algebras");
}

Mat3<CycElt> u_matrix(const CycElt& alpha) {
  Mat3<CycElt> m = Mat3<CycElt>::Zero();
  m(0, 2) = alpha;
  m(1, 0) = 1;
  m(2, 1) = 1;
  return m;
}

Mat3<CycElt> diag_embedding(const CycElt& a) {
  Mat3<CycElt> m = Mat3<CycElt>::Zero();
  for (int i = 0; i < 3; ++i) m(i, i) = sigma_pow(a, i);
  return m;
}

}  // namespace

AlgElt::AlgElt(CycElt alpha, CycElt x0, CycElt x1, CycElt x2)
    : alpha_(std::move(alpha)), x_{std::move(x0), std::move(x1), std::move(x2)} {
  if (!in_K(alpha_) || alpha_.is_zero()) throw std::invalid_argument("AlgElt: alpha must be a nonzero element of K");
  for (auto& x : x_) {
    if (7 % x.modulus() != 0) throw std::invalid_argument("AlgElt: coefficients must lie in Q(zeta_7)");
    x = x.lift(7);
  }
}

AlgElt AlgElt::scalar(const CycElt& a, const CycElt& alpha) { return AlgElt(alpha, a, 0, 0); }
AlgElt AlgElt::u(const CycElt& alpha) { return AlgElt(alpha, 0, 1, 0); }

AlgElt operator+(const AlgElt& a, const AlgElt& b) {
  require_same_algebra(a, b);
  return AlgElt(a.alpha_, a.x_[0] + b.x_[0], a.x_[1] + b.x_[1], a.x_[2] + b.x_[2]);
}

AlgElt operator-(const AlgElt& a) { return AlgElt(a.alpha_, -a.x_[0], -a.x_[1], -a.x_[2]); }
AlgElt operator-(const AlgElt& a, const AlgElt& b) { return a + (-b); }

AlgElt operator*(const AlgElt& a, const AlgElt& b) {
  require_same_algebra(a, b);
  // (a_i u^i)(b_j u^j) = a_i sigma^{-i}(b_j) u^{i+j}, u^3 = alpha
  std::array<CycElt, 3> out{CycElt(0), CycElt(0), CycElt(0)};
  for (int i = 0; i < 3; ++i) {
    if (a.x_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      const CycElt& bj = b.x_[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      CycElt term = a.x_[static_cast<std::size_t>(i)] * sigma_pow(bj, -i);
      if (i + j >= 3) term *= a.alpha_;
      out[static_cast<std::size_t>((i + j) % 3)] += term;
    }
  }
  return AlgElt(a.alpha_, out[0], out[1], out[2]);
}

bool operator==(const AlgElt& a, const AlgElt& b) { return a.alpha_ == b.alpha_ && a.x_ == b.x_; }

AlgElt alg_mul(const AlgElt& a, const AlgElt& b) { return a * b; }

Mat3<CycElt> to_matrix(const AlgElt& a) {
  Mat3<CycElt> u = u_matrix(a.alpha());
  Mat3<CycElt> u2 = u * u;
  return diag_embedding(a[0]) + diag_embedding(a[1]) * u + diag_embedding(a[2]) * u2;
}

AlgElt from_matrix(const Mat3<CycElt>& m, const CycElt& alpha) {
  AlgElt candidate(alpha, m(0, 0), apply_galois(kSigmaInv, m(1, 0).lift(7)), apply_galois(kSigma, m(2, 0).lift(7)));
  if (!exact_equal(to_matrix(candidate), m)) throw NotInImage("matrix is not in the image of the cyclic algebra");
  return candidate;
}

Mat3<CycElt> apply_galois(const GaloisAuto& g, const Mat3<CycElt>& m) {
  Mat3<CycElt> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = apply_galois(g, m(i, j));
  return out;
}

TraceNormPair reduced_trace_norm(const AlgElt& a) {
  Mat3<CycElt> m = to_matrix(a);
  return {m.trace(), exact_determinant(m)};
}

AlgElt alg_inverse(const AlgElt& a) {
  Mat3<CycElt> m = to_matrix(a);
  if (exact_determinant(m).is_zero()) throw NotInvertible("element has reduced norm 0");
  Mat3<CycElt> inv = exact_inverse(m);
  return from_matrix(inv, a.alpha());
}

AlgElt canonical_involution(const AlgElt& a) {
  const CycElt& alpha = a.alpha();
  AlgElt iota_u(alpha, 0, 0, alpha.conj());
  AlgElt iota_u2 = iota_u * iota_u;
  return AlgElt::scalar(a[0].conj(), alpha) + iota_u * AlgElt::scalar(a[1].conj(), alpha) +
         iota_u2 * AlgElt::scalar(a[2].conj(), alpha);
}

AlgElt twisted_involution(const AlgElt& x, const AlgElt& b) {
  if (reduced_trace_norm(b).nrd.is_zero()) throw NotInvertible("twisting element is not invertible");
  if (!(canonical_involution(b) == b)) throw NotIotaInvariant("twisting element is not iota-invariant");
  return b * canonical_involution(x) * alg_inverse(b);
}

AlgElt standard_b() {
  CycElt lb = lambda_bar();
  return AlgElt(fpp::alpha(), lambda() + lb, lb, lb);
}

DivisionWitness is_division_algebra(const CycElt& alpha) {
  if (!in_K(alpha) || alpha.is_zero()) throw std::invalid_argument("is_division_algebra: alpha must lie in K*");
  DivisionWitness w;
  auto [x, y] = to_K_coords(alpha);
  Int d;
  mpz_lcm(d.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
  // primes of K in the support of alpha lie over primes dividing d * N(d * alpha)
  Rat support = norm_K_to_Q(alpha * CycElt(Rat(d))) * d;
  w.steps.push_back("alpha = " + to_string(alpha) + ", N_K/Q(alpha) = " + to_string(norm_K_to_Q(alpha)));
  for (const Int& p : prime_support(support)) {
    if (p == 7) {
      w.steps.push_back("skip 7: ramified in L/K, its invariant is fixed by the others (sum of invariants is 0)");
      continue;
    }
    for (const KPrime& prime : primes_above(p)) {
      int v = valuation(prime, alpha);
      int f = residue_degree_in_L(prime);
      bool local_norm = (v % f) == 0;
      w.places.push_back({prime, v, f, local_norm});
      std::ostringstream s;
      s << "prime " << prime.label() << " over " << p << " (" << to_string(prime.splitting)
        << " in K): v(alpha) = " << v << ", residue degree in L/K = " << f << " (order of " << p
        << " mod 7 is " << (prime.splitting == Splitting::inert ? 2 * f : f) << "), "
        << (local_norm ? "local norm" : "v not divisible by f, local non-norm");
      w.steps.push_back(s.str());
      if (!local_norm) w.is_division = true;
    }
  }
  w.steps.push_back(w.is_division ? "alpha is not a norm from L: D is a division algebra"
                                  : "alpha is a local norm everywhere: D splits");
  return w;
}

std::string to_string(const AlgElt& a) {
  std::ostringstream out;
  out << "(" << to_string(a[0]) << ") + (" << to_string(a[1]) << ")*u + (" << to_string(a[2]) << ")*u^2";
  return out.str();
}

}  // namespace fpp
