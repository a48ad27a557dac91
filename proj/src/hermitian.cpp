#include "fpp/hermitian.hpp"

namespace fpp {

namespace {

int sign_changes(const std::vector<Sign>& seq) {
  int changes = 0;
  Sign last = Sign::zero;
  for (Sign s : seq) {
    if (s == Sign::zero) continue;
    if (last != Sign::zero && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

bool is_hermitian(const HermMatrix& h) { return exact_equal(conjugate_transpose(h), h); }

std::string Signature::standard_convention() const {
  return "(" + std::to_string(positives) + "," + std::to_string(negatives) + ")";
}

std::string Signature::negatives_first() const {
  return "(" + std::to_string(negatives) + "," + std::to_string(positives) + ")";
}

HermMatrix build_H_b(const AlgElt& b) {
  if (!(canonical_involution(b) == b)) throw NotHermitian("b is not iota-invariant: " + to_string(b));
  HermMatrix h = to_matrix(b);
  if (!is_hermitian(h)) throw NotHermitian("matrix of b is not hermitian");
  return h;
}

HermMatrix build_H_c() {
  CycElt c = CycElt::zeta(7, 1) + CycElt::zeta(7, -1);
  return to_matrix(AlgElt::scalar(c));
}

std::array<CycElt, 3> leading_minors(const HermMatrix& h) {
  return {h(0, 0), exact_determinant(h.topLeftCorner<2, 2>()), exact_determinant(h)};
}

Signature signature(const HermMatrix& h) {
  if (!is_hermitian(h)) throw NotHermitian("signature: matrix is not hermitian");
  auto minors = leading_minors(h);
  std::vector<Sign> seq{Sign::positive};
  for (const auto& m : minors) seq.push_back(exact_sign(m));
  if (std::none_of(seq.begin(), seq.end(), [](Sign s) { return s == Sign::zero; })) {
    int neg = sign_changes(seq);
    return {3 - neg, neg, 0};
  }
  // det(tI - H) = t^3 + c2 t^2 + c1 t + c0
  CycElt c2 = -h.trace();
  CycElt c1 = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0) + h(0, 0) * h(2, 2) - h(0, 2) * h(2, 0) + h(1, 1) * h(2, 2) -
              h(1, 2) * h(2, 1);
  CycElt c0 = -minors[2];
  std::array<Sign, 4> coeffs{exact_sign(c0), exact_sign(c1), exact_sign(c2), Sign::positive};
  int zeros = 0;
  while (zeros < 3 && coeffs[static_cast<std::size_t>(zeros)] == Sign::zero) ++zeros;
  std::vector<Sign> plus(coeffs.begin(), coeffs.end());
  std::vector<Sign> minus;
  for (std::size_t i = 0; i < 4; ++i) {
    Sign s = coeffs[i];
    if (i % 2 == 1 && s != Sign::zero) s = s == Sign::positive ? Sign::negative : Sign::positive;
    minus.push_back(s);
  }
  return {sign_changes(plus), sign_changes(minus), zeros};
}

CycElt hermitian_value(const HermMatrix& h, const Vec3<CycElt>& l) {
  CycElt sum(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!l(i).is_zero() && !l(j).is_zero()) sum += l(i).conj() * h(i, j) * l(j);
  return sum;
}

bool in_ball(const HermMatrix& h, const Vec3<CycElt>& l) {
  if (is_zero_matrix(l)) throw ZeroVector("in_ball: zero vector");
  return exact_sign(hermitian_value(h, l)) == Sign::positive;
}

}  // namespace fpp
