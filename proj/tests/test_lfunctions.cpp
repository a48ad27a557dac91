#include <doctest.h>

#include "fpp/lfunctions.hpp"
#include "support.hpp"

using namespace fpp;
using fpp::test::kCases;
using fpp::test::uniform;

namespace {

const DirichletCharacter kChi7 = DirichletCharacter::from_discriminant(-7);

bool oracle_agrees(const SymbolicReal& closed, const SeriesEstimate& s) {
  const FloatApprox f = sr_to_float(closed, 128);
  return abs(f.value - s.partial_sum) <= s.total_error() + f.error_bound;
}

}  // namespace

TEST_CASE("Bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rat(-1, 2));
  CHECK(bernoulli_number(2) == Rat(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == Rat(-1, 30));
  CHECK(bernoulli_number(12) == Rat(-691, 2730));
  CHECK(bernoulli_polynomial(2) == std::vector<Rat>{Rat(1, 6), -1, 1});
  CHECK(evaluate(bernoulli_polynomial(3), Rat(1, 2)) == 0);
}

TEST_CASE("characters") {
  CHECK(kChi7.modulus() == 7);
  CHECK(kChi7.is_odd());
  CHECK(kChi7(2) == 1);
  CHECK(kChi7(3) == -1);
  CHECK(kChi7(14) == 0);
  CHECK(DirichletCharacter::from_discriminant(-4)(3) == -1);
  CHECK(DirichletCharacter::from_discriminant(8)(3) == -1);
  CHECK_THROWS_AS(DirichletCharacter::from_discriminant(20), NotPrimitive);
  CHECK_THROWS_AS(DirichletCharacter::from_discriminant(-28), NotPrimitive);
  CHECK_NOTHROW(DirichletCharacter::from_discriminant(12));
}

TEST_CASE("generalized Bernoulli numbers") {
  CHECK(generalized_bernoulli(3, kChi7) == Rat(48, 7));
  CHECK(generalized_bernoulli(1, kChi7) == -1);
  const DirichletCharacter trivial = DirichletCharacter::from_discriminant(1);
  CHECK(generalized_bernoulli(1, trivial) == Rat(-1, 2));
  CHECK(generalized_bernoulli(2, trivial) == Rat(1, 6));
}

TEST_CASE("parity: B_{n,chi} vanishes when chi(-1) != (-1)^n") {
  for (long d : {-7L, -4L, -3L})
    for (int n = 1; n <= 6; ++n) {
      const DirichletCharacter chi = DirichletCharacter::from_discriminant(d);
      if (n % 2 == 0) CHECK(is_zero(generalized_bernoulli(n, chi)));
      else CHECK_FALSE(is_zero(generalized_bernoulli(n, chi)));
    }
}

TEST_CASE("special values") {
  CHECK(riemann_zeta(2) == SymbolicReal::monomial(Rat(1, 6), 2, 0));
  CHECK(riemann_zeta(4) == SymbolicReal::monomial(Rat(1, 90), 4, 0));
  CHECK(dirichlet_L_value(3, kChi7) == SymbolicReal::monomial(32, 3, -7));
  CHECK(dirichlet_L_value(1, DirichletCharacter::from_discriminant(-4)) == SymbolicReal::monomial(Rat(1, 4), 1, 0));
  CHECK_THROWS_AS(dirichlet_L_value(2, kChi7), ParityMismatch);
  CHECK_THROWS_AS(riemann_zeta(3), ParityMismatch);
  CHECK_THROWS_AS(dirichlet_L_value(3, DirichletCharacter::from_discriminant(-3)), Unsupported);
  CHECK(symbolic_sqrt(28) == SymbolicReal::monomial(2, 0, 1));
  CHECK_THROWS_AS(symbolic_sqrt(3), Unsupported);
}

TEST_CASE("closed forms agree with the series oracle") {
  const SeriesEstimate l3 = l_series_oracle(3, kChi7, 1000000);
  CHECK(l3.tail_bound < Rat(1, Int("1000000000000")));
  CHECK(l3.value() == doctest::Approx(1.0933430694295336).epsilon(1e-12));
  CHECK(oracle_agrees(dirichlet_L_value(3, kChi7), l3));
  CHECK_FALSE(oracle_agrees(printed_l_value(), l3));

  const DirichletCharacter trivial = DirichletCharacter::from_discriminant(1);
  CHECK(oracle_agrees(riemann_zeta(2), l_series_oracle(2, trivial, 100000)));
  const DirichletCharacter chi4 = DirichletCharacter::from_discriminant(-4);
  CHECK(oracle_agrees(dirichlet_L_value(1, chi4), l_series_oracle(1, chi4, 100000)));
}

TEST_CASE("property: closed form within the oracle error for random small characters") {
  const std::vector<long> discs{-7, -4, -3, 5, 8, -8, 13, 1, 12, -20};
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    const DirichletCharacter chi = DirichletCharacter::from_discriminant(discs[static_cast<std::size_t>(uniform(0, 9))]);
    const int n = static_cast<int>(uniform(1, 6));
    if ((chi.is_odd() ? 1 : 0) != n % 2 || (n == 1 && chi.discriminant() == 1)) continue;
    SymbolicReal closed;
    try {
      closed = dirichlet_L_value(n, chi);
    } catch (const Unsupported&) {
      continue;
    }
    ++checked;
    CHECK(oracle_agrees(closed, l_series_oracle(n, chi, 20000)));
  }
  CHECK(checked > 10);
}

TEST_CASE("covolume") {
  VolumeInput v = default_volume_input();
  CHECK(v.local_factor_product() == 3);
  CHECK(covolume(v) == Rat(3, 7));
  CHECK(euler_number_of_cover(covolume(v), 7) == 3);
  v.local_factors["2"] = 1;
  CHECK(covolume(v) == Rat(1, 7));
  VolumeInput printed = default_volume_input();
  printed.l_value = printed_l_value();
  CHECK(covolume(printed) == Rat(-21, 256));
  printed.l_value = SymbolicReal::monomial(1, 3, 0);
  CHECK_THROWS_AS(covolume(printed), NotRational);
}

TEST_CASE("property: pi and sqrt(7) cancel for any rational local factors") {
  for (int i = 0; i < kCases; ++i) {
    VolumeInput v = default_volume_input();
    v.local_factors["2"] = fpp::test::nonzero_rat(20, 6);
    v.local_factors["7"] = fpp::test::nonzero_rat(20, 6);
    const SymbolicReal s = covolume_symbolic(v);
    CHECK(sr_as_rational(s) == make_rat(1, 7) * v.local_factor_product());
  }
}

TEST_CASE("Euler number of covers") {
  CHECK(euler_number_of_cover(Rat(3, 7), 7) == 3);
  CHECK(euler_number_of_cover(Rat(1, 7), 21) == 3);
  CHECK(euler_number_of_cover(Rat(3, 7), 21) == 9);
}
