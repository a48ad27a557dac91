#include <doctest.h>

#include "fpp/hermitian.hpp"
#include "support.hpp"

using namespace fpp;
using fpp::test::kCases;

namespace {

const CycElt kZeta = CycElt::zeta(7);

Vec3<CycElt> basis_vector(int i) {
  Vec3<CycElt> e = Vec3<CycElt>::Zero();
  e(i) = 1;
  return e;
}

HermMatrix random_hermitian() {
  HermMatrix h;
  for (int i = 0; i < 3; ++i) {
    h(i, i) = fpp::test::random_real_cyc();
    for (int j = i + 1; j < 3; ++j) {
      h(i, j) = fpp::test::random_cyc(7, 2, 40);
      h(j, i) = h(i, j).conj();
    }
  }
  return h;
}

}  // namespace

TEST_CASE("H_b") {
  HermMatrix hb = build_H_b(standard_b());
  HermMatrix expected;
  expected << CycElt(-1), lambda(), lambda(), lambda_bar(), CycElt(-1), lambda(), lambda_bar(), lambda_bar(), CycElt(-1);
  CHECK(exact_equal(hb, expected));
  CHECK(is_hermitian(hb));
  auto minors = leading_minors(hb);
  CHECK(minors[0] == CycElt(-1));
  CHECK(minors[1] == CycElt(-1));
  CHECK(minors[2] == CycElt(3));
  Signature s = signature(hb);
  CHECK(s == Signature{1, 2, 0});
  CHECK(s.negatives_first() == "(2,1)");
  CHECK(s.standard_convention() == "(1,2)");
  CHECK(exact_equal(build_H_b(AlgElt::scalar(1)), Mat3<CycElt>(Mat3<CycElt>::Identity())));
  CHECK_THROWS_AS(build_H_b(AlgElt::u()), NotHermitian);
}

TEST_CASE("H_c and the ball") {
  const CycElt c = kZeta + kZeta.inverse();
  HermMatrix hc = build_H_c();
  CHECK(exact_equal(hc, build_H_b(AlgElt::scalar(c))));
  CHECK(hc(1, 1) == kZeta.pow(2) + kZeta.pow(5));
  CHECK(hc(2, 2) == kZeta.pow(4) + kZeta.pow(3));
  CHECK(signature(hc) == Signature{1, 2, 0});
  CHECK(in_ball(hc, basis_vector(0)));
  CHECK(!in_ball(hc, basis_vector(1)));
  CHECK(!in_ball(hc, basis_vector(2)));
  CHECK_THROWS_AS(in_ball(hc, Vec3<CycElt>::Zero()), ZeroVector);
  CHECK(in_ball(Mat3<CycElt>::Identity(), Vec3<CycElt>(kZeta, CycElt(0), lambda())));
}

TEST_CASE("signature basics") {
  CHECK(signature(Mat3<CycElt>::Identity()) == Signature{3, 0, 0});
  CHECK(signature(Mat3<CycElt>(-Mat3<CycElt>::Identity())) == Signature{0, 3, 0});
  HermMatrix degenerate = HermMatrix::Zero();
  degenerate(1, 1) = 1;
  CHECK(signature(degenerate) == Signature{1, 0, 2});
  HermMatrix hyperbolic = HermMatrix::Zero();
  hyperbolic(0, 1) = 1;
  hyperbolic(1, 0) = 1;
  hyperbolic(2, 2) = -1;
  CHECK(signature(hyperbolic) == Signature{1, 2, 0});
}

TEST_CASE("property: Sylvester congruence invariance") {
  const HermMatrix hb = build_H_b(standard_b());
  for (int i = 0; i < kCases; ++i) {
    const Mat3<CycElt> g = fpp::test::random_invertible_matrix();
    const HermMatrix h = conjugate_transpose(g) * hb * g;
    REQUIRE(is_hermitian(h));
    CHECK(signature(h) == Signature{1, 2, 0});
  }
}

TEST_CASE("property: negation swaps positives and negatives") {
  for (int i = 0; i < kCases; ++i) {
    const HermMatrix h = random_hermitian();
    const Signature s = signature(h), t = signature(HermMatrix(-h));
    CHECK(s.positives + s.negatives + s.zeros == 3);
    CHECK(t.positives == s.negatives);
    CHECK(t.negatives == s.positives);
    CHECK(t.zeros == s.zeros);
  }
}

TEST_CASE("property: random congruences of random forms, including rank-deficient ones") {
  for (int i = 0; i < kCases; ++i) {
    HermMatrix h = random_hermitian();
    if (i % 3 == 0) {
      // force rank <= 2 by making the form factor through a 2-dimensional space
      Mat3<CycElt> p = fpp::test::random_invertible_matrix();
      p.col(2) = p.col(0) + p.col(1);
      h = conjugate_transpose(p) * h * p;
    }
    const Mat3<CycElt> g = fpp::test::random_invertible_matrix();
    CHECK(signature(HermMatrix(conjugate_transpose(g) * h * g)) == signature(h));
  }
}

TEST_CASE("property: ball membership is projective") {
  const HermMatrix hc = build_H_c();
  for (int i = 0; i < kCases; ++i) {
    Vec3<CycElt> l(fpp::test::random_cyc(), fpp::test::random_cyc(), fpp::test::random_cyc());
    if (is_zero_matrix(l)) continue;
    const CycElt s = fpp::test::nonzero_cyc();
    const Vec3<CycElt> ls = l * s;
    CHECK(in_ball(hc, l) == in_ball(hc, ls));
    CHECK(hermitian_value(hc, l).conj() == hermitian_value(hc, l));
  }
}
