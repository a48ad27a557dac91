#include "fpp/singularities.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace fpp {

namespace {

long inverse_mod(long a, long n) {
  Int r, A(a), N(n);
  if (mpz_invert(r.get_mpz_t(), A.get_mpz_t(), N.get_mpz_t()) == 0)
    throw NotPrimitive(std::to_string(a) + " is not invertible mod " + std::to_string(n));
  return r.get_si();
}

// ((x)) = x - floor(x) - 1/2, and 0 at integers
Rat sawtooth(long num, long den) {
  long r = ((num % den) + den) % den;
  if (r == 0) return 0;
  return make_rat(r, den) - Rat(1, 2);
}

}  // namespace

CyclicSingularity::CyclicSingularity(int n_, int q_) : n(n_), q(q_) {
  if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
    throw std::invalid_argument("invalid cyclic singularity type (" + std::to_string(n) + "," + std::to_string(q) + ")");
}

CyclicSingularity CyclicSingularity::canonical() const {
  return {n, static_cast<int>(std::min<long>(q, inverse_mod(q, n)))};
}

std::string to_string(const CyclicSingularity& s) {
  return "(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
}

HJChain chain_from_self_intersections(std::vector<int> self) {
  const auto r = static_cast<Eigen::Index>(self.size());
  HJChain c{std::move(self), MatX<Rat>::Zero(r, r)};
  for (Eigen::Index i = 0; i < r; ++i) {
    if (c.self_intersections[static_cast<std::size_t>(i)] > -2)
      throw std::invalid_argument("Hirzebruch-Jung curves have self-intersection <= -2");
    c.intersection_matrix(i, i) = c.self_intersections[static_cast<std::size_t>(i)];
    if (i + 1 < r) c.intersection_matrix(i, i + 1) = c.intersection_matrix(i + 1, i) = 1;
  }
  return c;
}

HJChain hj_expand(const CyclicSingularity& s) {
  std::vector<int> self;
  long n = s.n, q = s.q;
  while (q > 0) {
    long b = (n + q - 1) / q;
    self.push_back(static_cast<int>(-b));
    long next = b * q - n;
    n = q;
    q = next;
  }
  return chain_from_self_intersections(std::move(self));
}

Rat continued_fraction_value(const HJChain& chain) {
  Rat value = 0;
  bool first = true;
  for (auto it = chain.self_intersections.rbegin(); it != chain.self_intersections.rend(); ++it) {
    value = first ? Rat(-*it) : Rat(-*it) - 1 / value;
    first = false;
  }
  return value;
}

std::string to_string(const HJChain& chain) {
  std::ostringstream out;
  for (int b : chain.self_intersections) out << "(" << b << ")";
  return out.str();
}

CyclicSingularity singularity_type_from_rotation(const RootOfUnity& r1, const RootOfUnity& r2) {
  const RootOfUnity a = r1.normalized();
  const RootOfUnity b = r2.normalized();
  const int n = std::lcm(a.modulus, b.modulus);
  if (a.modulus != n) throw NotPrimitive("first eigenvalue " + to_string(r1) + " does not generate the group");
  const long ea = a.exponent;
  const long eb = b.exponent * (n / b.modulus);
  const long q = ((eb * inverse_mod(ea, n)) % n + n) % n;
  if (q == 0) throw NotPrimitive("second eigenvalue is 1: not an isolated fixed point");
  return {n, static_cast<int>(q)};
}

Rat dedekind_sum(long q, long n) {
  if (n < 1 || std::gcd(q, n) != 1) throw std::invalid_argument("dedekind_sum: need n >= 1 and gcd(q, n) = 1");
  Rat s = 0;
  for (long k = 1; k < n; ++k) s += sawtooth(k, n) * sawtooth(k * q, n);
  return s;
}

Rat signature_defect(const CyclicSingularity& s) { return -4 * dedekind_sum(s.q, s.n); }

Rat euler_height(const OrbifoldSurface& x) {
  Rat h = x.euler;
  for (const auto& p : x.points) h -= 1 - make_rat(1, p.type.n);
  return h;
}

Rat signature_height(const OrbifoldSurface& x) {
  Rat h = x.signature;
  for (const auto& p : x.points) h -= signature_defect(p.type);
  return h;
}

bool check_cover_multiplicativity(const Rat& y_euler, const Rat& y_sign, const OrbifoldSurface& x, long degree) {
  if (degree < 1) throw std::invalid_argument("check_cover_multiplicativity: degree must be positive");
  return y_euler == degree * euler_height(x) && y_sign == degree * signature_height(x);
}

ResolvedInvariants resolve_invariants(const OrbifoldSurface& x) {
  ResolvedInvariants r{x.euler, x.signature, 0};
  for (const auto& p : x.points) r.blowups += static_cast<int>(hj_expand(p.type).length());
  r.euler += r.blowups;
  r.signature -= r.blowups;
  return r;
}

OrbifoldSurface x_gamma() {
  return {"X_Gamma", 3, 1, {{"x", {7, 3}}, {"x^sigma", {7, 3}}, {"x^sigma^2", {7, 3}}}};
}

OrbifoldSurface x_gamma_tilde() {
  return {"X_Gamma_tilde", 3, 1, {{"P0", {7, 3}}, {"P1", {3, 2}}, {"P2", {3, 2}}, {"P3", {3, 2}}}};
}

BranchSearch solve_branch_data(const Rat& total_euler, const Rat& total_sign,
                               const std::vector<CyclicSingularity>& known_points, const Rat& target_euler_height,
                               const Rat& target_sign_height, int d_max) {
  if (d_max < 2) throw std::invalid_argument("solve_branch_data: d_max must be at least 2");
  Rat euler_left = total_euler - target_euler_height;
  Rat sign_left = total_sign - target_sign_height;
  for (const auto& p : known_points) {
    euler_left -= 1 - make_rat(1, p.n);
    sign_left -= signature_defect(p);
  }
  std::vector<CyclicSingularity> types;
  for (int d = 2; d <= d_max; ++d)
    for (int e = 1; e < d; ++e)
      if (std::gcd(d, e) == 1 && CyclicSingularity(d, e).canonical().q == e) types.emplace_back(d, e);

  BranchSearch out;
  std::vector<CyclicSingularity> current;
  // every point lowers the Euler height by at least 1/2
  std::function<void(std::size_t, const Rat&, const Rat&)> search = [&](std::size_t start, const Rat& e_left,
                                                                        const Rat& s_left) {
    if (is_zero(e_left)) {
      out.euler_candidates.push_back(current);
      if (is_zero(s_left)) out.solutions.push_back(current);
      return;
    }
    if (sgn(e_left) < 0) return;
    for (std::size_t i = start; i < types.size(); ++i) {
      Rat de = 1 - make_rat(1, types[i].n);
      if (de > e_left) continue;
      current.push_back(types[i]);
      search(i, e_left - de, s_left - signature_defect(types[i]));
      current.pop_back();
    }
  };
  search(0, euler_left, sign_left);
  return out;
}

std::vector<Rat> chain_divisor_system(const HJChain& chain, int k, const std::vector<Rat>& d) {
  const auto r = static_cast<Eigen::Index>(chain.length());
  if (static_cast<Eigen::Index>(d.size()) != r) throw std::invalid_argument("chain_divisor_system: d has wrong length");
  VecX<Rat> rhs(r);
  for (Eigen::Index i = 0; i < r; ++i)
    rhs(i) = Rat(k * (-chain.self_intersections[static_cast<std::size_t>(i)] - 2)) - d[static_cast<std::size_t>(i)];
  if (is_zero(exact_determinant(chain.intersection_matrix)))
    throw SingularMatrix("chain intersection matrix is singular");
  VecX<Rat> a = exact_solve(chain.intersection_matrix, rhs);
  if (!exact_equal(VecX<Rat>(chain.intersection_matrix * a), rhs))
    throw std::logic_error("chain_divisor_system: residual is nonzero");
  return {a.data(), a.data() + a.size()};
}

}  // namespace fpp
