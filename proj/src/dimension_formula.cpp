#include "fpp/dimension_formula.hpp"

#include <cstdlib>
#include <numeric>

#include "fpp/hermitian.hpp"
#include "fpp/singularities.hpp"

namespace fpp {

namespace {

RootOfUnity as_root_of_unity(const CycElt& x, int modulus) {
  for (int e = 0; e < modulus; ++e)
    if (CycElt::zeta(modulus, e) == x) return RootOfUnity{modulus, e}.normalized();
  throw NotInImage("not a " + std::to_string(modulus) + "-th root of unity: " + to_string(x));
}

// Classes of the nontrivial powers of a rotation diag(nu1, nu2) with cyclic stabilizer of order m.
void add_point(ClassDataset& ds, const std::string& label, const RootOfUnity& nu1, const RootOfUnity& nu2, int m,
               int j_exponent) {
  for (int i = 1; i < m; ++i) {
    FixedPointClass c;
    c.label = label + "^" + std::to_string(i);
    c.r = 0;
    c.virtual_euler = 1;
    c.m = m;
    c.normal_eigenvalues = {nu1.pow(i), nu2.pow(i)};
    c.j = (nu1.pow(i) * nu2.pow(i)).pow(j_exponent);
    ds.classes.push_back(c);
  }
}

FixedPointClass identity_class(const Rat& virtual_euler) {
  FixedPointClass c;
  c.label = "identity";
  c.r = 2;
  c.virtual_euler = virtual_euler;
  return c;
}

std::string normalization_text(int e7, int e3) {
  return "j = (nu1*nu2)^" + std::to_string(e7) + " on order-7 classes, (nu1*nu2)^" + std::to_string(e3) +
         " on order-3 classes";
}

// Tangent eigenvalues (nu1, nu2) of diag(zeta, zeta^2, zeta^4) at the fixed line inside the ball of H_c.
std::pair<RootOfUnity, RootOfUnity> gamma_rotation() {
  Mat3<CycElt> m = to_matrix(AlgElt::scalar(CycElt::zeta(7, 1)));
  HermMatrix hc = build_H_c();
  int ball = -1;
  for (int i = 0; i < 3; ++i) {
    Vec3<CycElt> e = Vec3<CycElt>::Zero();
    e(i) = 1;
    if (in_ball(hc, e)) {
      if (ball >= 0) throw std::logic_error("more than one eigenline in the ball");
      ball = i;
    }
  }
  if (ball < 0) throw std::logic_error("no eigenline in the ball");
  std::vector<RootOfUnity> nu;
  for (int i = 0; i < 3; ++i)
    if (i != ball) nu.push_back(as_root_of_unity(m(i, i) / m(ball, ball), 7));
  return {nu[0], nu[1]};
}

}  // namespace

void FixedPointClass::validate() const {
  if (m < 1) throw std::invalid_argument("class " + label + ": m must be positive");
  if (r == 2) {
    if (!normal_eigenvalues.empty() || !(j == RootOfUnity{1, 0}))
      throw std::invalid_argument("class " + label + ": r = 2 requires no normal eigenvalues and j = 1");
  } else if (r == 0) {
    if (normal_eigenvalues.size() != 2)
      throw std::invalid_argument("class " + label + ": r = 0 requires two normal eigenvalues");
  } else {
    throw std::invalid_argument("class " + label + ": r must be 0 or 2");
  }
}

CycElt R_coefficient(int r, int k, const std::vector<CycElt>& nus) {
  if (r < 0) throw std::invalid_argument("R_coefficient: r must be nonnegative");
  if (k < 0) throw std::invalid_argument("R_coefficient: k must be nonnegative");
  const auto len = static_cast<std::size_t>(r) + 1;
  // (1 - z)^{3k-1}, truncated; for k = 0 this is 1/(1 - z) = sum z^t
  std::vector<CycElt> series(len, CycElt(0));
  const long power = 3L * k - 1;
  for (std::size_t t = 0; t < len; ++t) {
    if (power >= 0) {
      if (static_cast<long>(t) > power) break;
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(power), t);
      series[t] = CycElt(Rat((t % 2 == 0) ? b : Int(-b)));
    } else {
      series[t] = CycElt(1);
    }
  }
  for (const CycElt& nu : nus) {
    if (nu == CycElt(1)) throw EigenvalueOne("normal eigenvalue equal to 1");
    // 1/(1 - nu + nu z) = sum_t c (-nu c)^t z^t with c = 1/(1 - nu)
    const CycElt c = (CycElt(1) - nu).inverse();
    const CycElt ratio = -nu * c;
    std::vector<CycElt> factor(len);
    factor[0] = c;
    for (std::size_t t = 1; t < len; ++t) factor[t] = factor[t - 1] * ratio;
    std::vector<CycElt> prod(len, CycElt(0));
    for (std::size_t a = 0; a < len; ++a)
      for (std::size_t b = 0; a + b < len; ++b) prod[a + b] += series[a] * factor[b];
    series = std::move(prod);
  }
  return series[static_cast<std::size_t>(r)];
}

CycElt dimension_sum(const ClassDataset& ds, int k) {
  if (k < 2) throw std::invalid_argument("dimension: weights k >= 2 only");
  CycElt sum(0);
  for (const auto& c : ds.classes) {
    c.validate();
    std::vector<CycElt> nus;
    for (const auto& nu : c.normal_eigenvalues) nus.push_back(nu.value());
    CycElt term = CycElt(c.virtual_euler / (c.m * (c.r + 1))) * c.j.pow(k).value() * R_coefficient(c.r, k, nus);
    sum += term;
  }
  return sum;
}

long dimension(const ClassDataset& ds, int k) {
  CycElt sum = dimension_sum(ds, k);
  if (!(sum.conj() == sum)) throw NotAnInteger(ds.label + ", k=" + std::to_string(k) + ": sum is not real: " + to_string(sum));
  if (!sum.is_rational()) throw NotAnInteger(ds.label + ", k=" + std::to_string(k) + ": sum is irrational: " + to_string(sum));
  Rat q = sum.rational_value();
  if (!is_integer(q) || sgn(q) < 0)
    throw NotAnInteger(ds.label + ", k=" + std::to_string(k) + ": sum is " + to_string(q));
  return q.get_num().get_si();
}

ClassDataset build_gamma_dataset(int j_exponent) {
  ClassDataset ds;
  ds.label = "gamma";
  ds.cyclotomic_modulus = 7;
  ds.j_normalization = normalization_text(j_exponent, j_exponent);
  ds.classes.push_back(identity_class(euler_height(x_gamma())));
  auto [nu1, nu2] = gamma_rotation();
  const std::array<std::string, 3> names{"x", "x^sigma", "x^sigma^2"};
  for (int t = 0; t < 3; ++t) {
    const int s = 1 << t;  // sigma^t: zeta -> zeta^(2^t)
    add_point(ds, names[static_cast<std::size_t>(t)], nu1.pow(s), nu2.pow(s), 7, j_exponent);
  }
  return ds;
}

ClassDataset build_gamma_tilde_dataset(int j_exponent_7, int j_exponent_3) {
  ClassDataset ds;
  ds.label = "gamma_tilde";
  ds.j_normalization = normalization_text(j_exponent_7, j_exponent_3);
  const OrbifoldSurface x = x_gamma_tilde();
  ds.classes.push_back(identity_class(euler_height(x)));
  auto [nu1, nu2] = gamma_rotation();
  add_point(ds, "P0", nu1, nu2, 7, j_exponent_7);
  BranchSearch search = solve_branch_data(x.euler, x.signature, {CyclicSingularity(7, 3)}, euler_height(x),
                                          signature_height(x), 12);
  if (search.solutions.size() != 1) throw Ambiguous("branch data for the order-3 points is not unique");
  int idx = 1;
  int modulus = 7;
  for (const auto& p : search.solutions.front()) {
    add_point(ds, "P" + std::to_string(idx++), RootOfUnity{p.n, 1}, RootOfUnity{p.n, p.q}, p.n, j_exponent_3);
    modulus = std::lcm(modulus, p.n);
  }
  ds.cyclotomic_modulus = modulus;
  return ds;
}

ClassDataset galois_conjugate(const ClassDataset& ds, int s) {
  if (std::gcd(s, ds.cyclotomic_modulus) != 1) throw std::invalid_argument("galois_conjugate: s must be a unit");
  ClassDataset out = ds;
  auto conj_root = [&](RootOfUnity r) {
    const int n = ds.cyclotomic_modulus;
    if (n % r.modulus != 0) throw std::invalid_argument("root outside the dataset's cyclotomic field");
    return RootOfUnity{n, r.exponent * (n / r.modulus) * s}.normalized();
  };
  for (auto& c : out.classes) {
    c.j = conj_root(c.j);
    for (auto& nu : c.normal_eigenvalues) nu = conj_root(nu);
  }
  return out;
}

long NormalizationCandidate::distance() const {
  return std::labs(*gamma2 - 1) + std::labs(*gamma3 - 4) + std::labs(*gamma_tilde2 - 1) + std::labs(*gamma_tilde3 - 1);
}

std::vector<NormalizationCandidate> normalization_search(int range) {
  auto try_dim = [](const ClassDataset& ds, int k) -> std::optional<long> {
    try {
      return dimension(ds, k);
    } catch (const NotAnInteger&) {
      return std::nullopt;
    }
  };
  std::vector<NormalizationCandidate> out;
  for (int s7 = -range; s7 <= range; ++s7) {
    ClassDataset g = build_gamma_dataset(s7);
    for (int s3 = -range; s3 <= range; ++s3) {
      ClassDataset gt = build_gamma_tilde_dataset(s7, s3);
      out.push_back({s7, s3, try_dim(g, 2), try_dim(g, 3), try_dim(gt, 2), try_dim(gt, 3)});
    }
  }
  return out;
}

}  // namespace fpp
