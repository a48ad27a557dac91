#include <doctest.h>

#include <cmath>
#include <thread>

#include "fpp/json_io.hpp"
#include "fpp/quadratic_field.hpp"
#include "support.hpp"

using namespace fpp;
using fpp::test::kCases;
using fpp::test::nonzero_cyc;
using fpp::test::random_cyc;

namespace {

const GaloisAuto kSigma = GaloisAuto::sigma();
const GaloisAuto kConj = GaloisAuto::conjugation(7);

}  // namespace

TEST_CASE("field examples") {
  const CycElt z = CycElt::zeta(7);
  CHECK(z * z.pow(6) == CycElt(1));
  CHECK(lambda() * lambda_bar() == CycElt(2));
  CHECK(lambda_bar().inverse() * lambda() == alpha());
  CHECK(alpha() * alpha().conj() == CycElt(1));
  CHECK(lambda() + lambda_bar() == CycElt(-1));
  CHECK_THROWS_AS(CycElt(0).inverse(), DivisionByZero);
  CHECK(z.coeffs().size() == 6);
  CHECK(CycElt::zeta(21).coeffs().size() == 12);
}

TEST_CASE("mixed moduli promote to the lcm") {
  CycElt w = CycElt::zeta(3);
  CycElt z = CycElt::zeta(7);
  CycElt p = w * z;
  CHECK(p.modulus() == 21);
  CHECK(p == CycElt::zeta(21, 7 + 3));
  CHECK(w * w + w + CycElt(1) == CycElt(0));
}

TEST_CASE("Galois examples") {
  const CycElt z = CycElt::zeta(7);
  CHECK(apply_galois(kSigma, z) == z.pow(2));
  CHECK(apply_galois(kSigma, lambda()) == lambda());
  const CycElt c = z + z.inverse();
  CHECK(apply_galois(kConj, c) == c);
  CHECK(c.conj() == c);
  CHECK_THROWS(apply_galois(GaloisAuto{7, 7}, z));
}

TEST_CASE("trace and norm to K") {
  const CycElt z = CycElt::zeta(7);
  CHECK(trace_norm_to_K(z).trace == lambda());
  CHECK(trace_norm_to_K(z).norm == CycElt(1));
  CHECK(trace_norm_to_K(lambda()).trace == 3 * lambda());
  CHECK(rational_norm(CycElt(1) - z) == 7);
  CHECK(rational_norm(lambda()) == 8);
  CHECK(norm_K_to_Q(lambda()) == 2);
  CHECK(rational_norm(CycElt(1)) == 1);
}

TEST_CASE("exact_sign examples") {
  const CycElt z = CycElt::zeta(7);
  CHECK(exact_sign(z + z.pow(6)) == Sign::positive);
  CHECK(exact_sign(z.pow(2) + z.pow(5)) == Sign::negative);
  CHECK(exact_sign(CycElt(0)) == Sign::zero);
  CHECK(exact_sign(CycElt(Rat(-1, 1000000))) == Sign::negative);
  CHECK_THROWS_AS(exact_sign(z), NotReal);
}

TEST_CASE("subfield K") {
  CHECK(in_K(lambda()));
  CHECK(!in_K(CycElt::zeta(7)));
  auto [x, y] = to_K_coords(lambda_bar());
  CHECK(x == -1);
  CHECK(y == -1);
  CHECK(from_K_coords(3, 2) == CycElt(3) + 2 * lambda());
  CHECK_THROWS_AS(to_K_coords(CycElt::zeta(7)), NotInImage);
  CycElt s = lambda() - lambda_bar();
  CHECK(s * s == CycElt(-7));
}

TEST_CASE("roots of unity") {
  RootOfUnity r{21, 7};
  CHECK(r.normalized() == RootOfUnity{3, 1});
  CHECK(r.order() == 3);
  CHECK((RootOfUnity{7, 3} * RootOfUnity{7, 5}) == RootOfUnity{7, 1});
  CHECK(RootOfUnity{7, -1}.normalized().exponent == 6);
  CHECK(RootOfUnity{3, 2}.value() == CycElt::zeta(3, 2));
}

TEST_CASE("property: field axioms") {
  for (int i = 0; i < kCases; ++i) {
    const CycElt a = random_cyc(), b = random_cyc(), c = random_cyc();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == CycElt(0));
    const CycElt n = nonzero_cyc();
    CHECK(n * n.inverse() == CycElt(1));
    CHECK((a / n) * n == a);
  }
}

TEST_CASE("property: Galois relations") {
  for (int i = 0; i < kCases; ++i) {
    const CycElt a = random_cyc(), b = random_cyc();
    const CycElt s3 = apply_galois(kSigma, apply_galois(kSigma, apply_galois(kSigma, a)));
    CHECK(s3 == a);
    CHECK(a.conj().conj() == a);
    CHECK(apply_galois(kSigma, a.conj()) == apply_galois(kSigma, a).conj());
    CHECK(apply_galois(kSigma, a * b) == apply_galois(kSigma, a) * apply_galois(kSigma, b));
    CHECK(apply_galois(kSigma, a + b) == apply_galois(kSigma, a) + apply_galois(kSigma, b));
  }
}

TEST_CASE("property: trace and norm are sigma-fixed; norms are multiplicative") {
  for (int i = 0; i < kCases; ++i) {
    const CycElt a = random_cyc(), b = random_cyc();
    TraceNorm tn = trace_norm_to_K(a);
    CHECK(in_K(tn.trace));
    CHECK(in_K(tn.norm));
    CHECK(rational_norm(a * b) == rational_norm(a) * rational_norm(b));
    CHECK(trace_norm_to_K(a * b).norm == tn.norm * trace_norm_to_K(b).norm);
  }
}

TEST_CASE("property: exact_sign agrees with double evaluation") {
  int checked = 0;
  while (checked < kCases) {
    const CycElt r = fpp::test::random_real_cyc();
    const double v = r.to_complex().real();
    if (std::abs(v) <= 1e-6) continue;
    ++checked;
    CHECK(exact_sign(r) == (v > 0 ? Sign::positive : Sign::negative));
  }
}

TEST_CASE("property: nearly cancelling reals get the right sign") {
  const CycElt z = CycElt::zeta(7);
  const CycElt c = z + z.inverse();  // 2cos(2pi/7) = 1.2469796...
  for (int i = 0; i < kCases; ++i) {
    const Rat eps = make_rat(fpp::test::uniform(1, 9), Int(10) * Int(fpp::test::uniform(10000000, 99999999)));
    const Rat below = make_rat(12469796, 10000000) - eps;  // rational just below c
    CHECK(exact_sign(c - CycElt(below)) == Sign::positive);
    CHECK(exact_sign(CycElt(below + make_rat(1, 1000000)) - c) == Sign::positive);
  }
}

TEST_CASE("property: JSON round-trip") {
  for (int i = 0; i < kCases; ++i) {
    const CycElt a = random_cyc(i % 2 == 0 ? 7 : 21);
    CHECK(cyc_from_json(to_json(a)) == a);
  }
}

TEST_CASE("concurrent first use of the field cache") {
  std::vector<std::thread> threads;
  std::vector<CycElt> results(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([t, &results] {
      const int n = 11 + 2 * t;
      CycElt z = CycElt::zeta(n);
      results[static_cast<std::size_t>(t)] = z.pow(n);
    });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == CycElt(1));
}

TEST_CASE("valuations in K") {
  const auto primes2 = primes_above(2);
  REQUIRE(primes2.size() == 2);
  CHECK(primes2[0].label() == "(lambda)");
  CHECK(valuation(primes2[0], lambda()) == 1);
  CHECK(valuation(primes2[0], lambda_bar()) == 0);
  CHECK(valuation(primes2[1], alpha()) == -1);
  CHECK(residue_degree_in_L(primes2[0]) == 3);
  CHECK(splitting_of(3) == Splitting::inert);
  CHECK(splitting_of(7) == Splitting::ramified);
  CHECK(splitting_of(11) == Splitting::split);
  CHECK(residue_degree_in_L(primes_above(3).front()) == 3);
  CHECK(residue_degree_in_L(primes_above(29).front()) == 1);
}

TEST_CASE("property: valuations are additive") {
  const auto primes = primes_above(2);
  for (int i = 0; i < kCases; ++i) {
    CycElt a = fpp::test::random_K(), b = fpp::test::random_K();
    if (a.is_zero() || b.is_zero()) continue;
    for (const auto& p : primes) CHECK(valuation(p, a * b) == valuation(p, a) + valuation(p, b));
  }
}
