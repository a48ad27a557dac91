#include "fpp/order.hpp"

#include <numeric>

namespace fpp {

namespace {

constexpr int kRank = 18;  // Z-rank of an order in D

VecX<Rat> rational_coords(const AlgElt& x) {
  VecX<Rat> v(kRank);
  for (int k = 0; k < 3; ++k) {
    const CycElt lifted = x[k].lift(7);
    auto c = lifted.coeffs();
    for (int i = 0; i < 6; ++i) v(6 * k + i) = c[static_cast<std::size_t>(i)];
  }
  return v;
}

MatX<Rat> z_basis_matrix(const OrderBasis& basis) {
  if (basis.elements.size() != 9) throw std::invalid_argument("order basis must have 9 elements");
  MatX<Rat> m(kRank, kRank);
  const AlgElt lam = AlgElt::scalar(lambda(), basis.elements.front().alpha());
  for (std::size_t j = 0; j < 9; ++j) {
    m.col(static_cast<Eigen::Index>(j)) = rational_coords(basis.elements[j]);
    m.col(static_cast<Eigen::Index>(j + 9)) = rational_coords(lam * basis.elements[j]);
  }
  return m;
}

MatX<Rat> coordinates_of(const OrderBasis& basis, const std::vector<AlgElt>& xs) {
  MatX<Rat> rhs(kRank, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t j = 0; j < xs.size(); ++j) rhs.col(static_cast<Eigen::Index>(j)) = rational_coords(xs[j]);
  return exact_solve(z_basis_matrix(basis), rhs);
}

InvarianceReport lattice_report(const OrderBasis& basis, const std::vector<AlgElt>& images) {
  MatX<Rat> coords = coordinates_of(basis, images);
  InvarianceReport r;
  for (Eigen::Index j = 0; j < coords.cols(); ++j) {
    bool ok = true;
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
      const Int& den = coords(i, j).get_den();
      if (den != 1) {
        ok = false;
        mpz_lcm(r.worst_denominator.get_mpz_t(), r.worst_denominator.get_mpz_t(), den.get_mpz_t());
      }
    }
    if (!ok) {
      r.invariant = false;
      r.failing.push_back(static_cast<std::size_t>(j));
    }
  }
  return r;
}

OrderBasis blocks(std::string label, const CycElt& c1, const CycElt& c2) {
  OrderBasis b{std::move(label), {}};
  const CycElt a = alpha();
  const std::array<CycElt, 3> scale{CycElt(1), c1, c2};
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      std::array<CycElt, 3> x{CycElt(0), CycElt(0), CycElt(0)};
      x[static_cast<std::size_t>(k)] = CycElt::zeta(7, i) * scale[static_cast<std::size_t>(k)];
      b.elements.emplace_back(a, x[0], x[1], x[2]);
    }
  }
  return b;
}

}  // namespace

OrderBasis standard_order_basis() { return blocks("o_L + o_L lambda_bar u + o_L lambda_bar u^2", lambda_bar(), lambda_bar()); }

OrderBasis unscaled_order_basis() { return blocks("o_L + o_L u + o_L u^2", 1, 1); }

OrderBasis scale_block(const OrderBasis& basis, int block, const CycElt& factor) {
  if (block < 0 || block > 2) throw std::invalid_argument("scale_block: block must be 0, 1 or 2");
  OrderBasis out = basis;
  out.label += " (block " + std::to_string(block) + " scaled by " + to_string(factor) + ")";
  const AlgElt f = AlgElt::scalar(factor, basis.elements.front().alpha());
  for (int i = 0; i < 3; ++i) {
    auto& e = out.elements[static_cast<std::size_t>(3 * block + i)];
    e = f * e;
  }
  return out;
}

DiscriminantReport discriminant_of(const std::vector<Mat3<CycElt>>& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  MatX<CycElt> gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      CycElt t = (basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]).trace();
      if (!in_K(t) || !is_integral_in_K(t))
        throw BasisNotIntegral("trd(x_" + std::to_string(i) + " x_" + std::to_string(j) + ") = " + to_string(t) +
                               " is not in o_K");
      gram(i, j) = t;
    }
  }
  DiscriminantReport r;
  r.determinant = exact_determinant(gram);
  if (r.determinant.is_zero()) throw SingularMatrix("discriminant: elements are linearly dependent");
  r.ideal_norm = Rat(abs(norm_K_to_Q(r.determinant))).get_num();
  r.factorization = factor_principal_ideal(r.determinant);
  int v_lambda = 0, v_lambda_bar = 0;
  for (const auto& pp : r.factorization) {
    if (pp.prime.p != 2) continue;
    (pp.prime.root == 0 ? v_lambda : v_lambda_bar) = pp.exponent;
  }
  r.two_exponent = v_lambda == v_lambda_bar ? v_lambda : -1;
  r.equals_expected = r.two_exponent == 6 && r.factorization.size() == 2;
  return r;
}

DiscriminantReport discriminant(const OrderBasis& basis) {
  std::vector<Mat3<CycElt>> mats;
  for (const auto& e : basis.elements) mats.push_back(to_matrix(e));
  return discriminant_of(mats);
}

std::vector<Mat3<CycElt>> matrix_unit_basis() {
  std::vector<Mat3<CycElt>> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Mat3<CycElt> e = Mat3<CycElt>::Zero();
      e(i, j) = 1;
      out.push_back(e);
    }
  return out;
}

std::vector<Rat> z_coordinates(const OrderBasis& basis, const AlgElt& x) {
  MatX<Rat> c = coordinates_of(basis, {x});
  return {c.data(), c.data() + c.size()};
}

bool in_order(const OrderBasis& basis, const AlgElt& x) { return lattice_report(basis, {x}).invariant; }

bool is_closed_under_multiplication(const OrderBasis& basis) {
  std::vector<AlgElt> products;
  for (const auto& x : basis.elements)
    for (const auto& y : basis.elements) products.push_back(x * y);
  return lattice_report(basis, products).invariant;
}

InvarianceReport iota_invariance(const OrderBasis& basis) {
  std::vector<AlgElt> images;
  for (const auto& x : basis.elements) images.push_back(canonical_involution(x));
  return lattice_report(basis, images);
}

InvarianceReport iota_b_invariance(const OrderBasis& basis, const AlgElt& b) {
  std::vector<AlgElt> images;
  for (const auto& x : basis.elements) images.push_back(twisted_involution(x, b));
  return lattice_report(basis, images);
}

bool is_iota_b_invariant(const OrderBasis& basis, const AlgElt& b) { return iota_b_invariance(basis, b).invariant; }

TorsionReport torsion_orders(int center_discriminant) {
  if (center_discriminant != -7 && center_discriminant != -4)
    throw std::invalid_argument("torsion_orders: center discriminant must be -7 or -4");
  const int conductor = -center_discriminant;
  TorsionReport r;
  // [K(zeta_m):K] >= phi(m)/2 must be at most 3
  for (int m = 1; m <= 4 * 7; ++m) {
    const int phi = euler_phi(m);
    if (phi > 6) continue;
    const bool contains_K = m % conductor == 0;
    const int degree = contains_K ? phi / 2 : phi;
    if (degree != 1 && degree != 3) {
      r.excluded[m] = "[K(zeta_" + std::to_string(m) + "):K] = " + std::to_string(degree) +
                      " is not 1 or 3, so zeta_" + std::to_string(m) + " does not embed in D";
      continue;
    }
    if (m == 2) {
      r.excluded[m] = "nrd(-1) = -1";
    } else if (m % 2 == 0) {
      r.excluded[m] = "contains -1, and nrd(-1) = -1";
    } else {
      r.allowed_orders.push_back(m);
    }
  }
  return r;
}

Int congruence_index(const Int& q, int d) {
  if (q < 2 || d < 1) throw std::invalid_argument("congruence_index: need q >= 2 and d >= 1");
  Int qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  return (qd - 1) / (q - 1);
}

bool torsion_free_check(const Int& ideal_norm, int torsion_order) {
  if (ideal_norm < 2) throw std::invalid_argument("torsion_free_check: ideal norm must be at least 2");
  if (torsion_order < 2) throw std::invalid_argument("torsion_free_check: torsion order must be at least 2");
  for (int p = 2; p * p <= torsion_order; ++p)
    if (torsion_order % p == 0) throw std::invalid_argument("torsion_free_check: torsion order must be prime");
  const auto& phi = cyclotomic_polynomial(torsion_order);
  Int value = std::accumulate(phi.begin(), phi.end(), Int(0));
  return value % ideal_norm != 0;
}

}  // namespace fpp
