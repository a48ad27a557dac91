#include <doctest.h>

#include "fpp/json_io.hpp"
#include "support.hpp"

using namespace fpp;
using fpp::test::kCases;
using fpp::test::small_rat;
using fpp::test::uniform;

namespace {

SymbolicReal random_symbolic() {
  SymbolicReal x;
  const long terms = uniform(0, 3);
  for (long t = 0; t < terms; ++t)
    x = x + SymbolicReal::monomial(small_rat(), static_cast<int>(uniform(-5, 5)), static_cast<int>(uniform(-5, 5)));
  return x;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(make_rat(6, -4) == Rat(-3, 2));
  CHECK(make_rat(6, -4).get_den() == 2);
  CHECK_THROWS_AS(make_rat(1, 0), DivisionByZero);
  CHECK(parse_rat("-10/4") == Rat(-5, 2));
  CHECK(parse_rat("123456789012345678901234567890") == Rat(Int("123456789012345678901234567890")));
  CHECK_THROWS_AS(parse_rat("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rat("abc"), ConfigError);
  CHECK_THROWS_AS(parse_rat(""), ConfigError);
  CHECK(to_string(Rat(3, 7)) == "3/7");
  CHECK(to_string(Rat(-4)) == "-4");
}

TEST_CASE("sr_add examples") {
  const SymbolicReal pi2_6 = SymbolicReal::monomial(Rat(1, 6), 2, 0);
  CHECK(sr_add(pi2_6, SymbolicReal()) == pi2_6);
  CHECK(sr_add(SymbolicReal(Rat(3, 7)), SymbolicReal(Rat(-3, 7))).is_zero());
  CHECK(sr_add(SymbolicReal::sqrt7(), SymbolicReal::sqrt7()) == SymbolicReal::monomial(2, 0, 1));
}

TEST_CASE("sr_mul examples") {
  CHECK(sr_mul(SymbolicReal::sqrt7(), SymbolicReal::sqrt7()) == SymbolicReal(Rat(7)));
  CHECK(sr_mul(SymbolicReal::monomial(Rat(1, 6), 2, 0), SymbolicReal::pi(3)) == SymbolicReal::monomial(Rat(1, 6), 5, 0));
  CHECK(sr_mul(SymbolicReal::sqrt7(5), SymbolicReal::sqrt7(-7)) == SymbolicReal(Rat(1, 7)));
}

TEST_CASE("sr_as_rational") {
  CHECK(sr_as_rational(SymbolicReal(Rat(3, 7))) == Rat(3, 7));
  CHECK_THROWS_AS(sr_as_rational(SymbolicReal::monomial(Rat(1, 6), 2, 0)), NotRational);
  CHECK_THROWS_AS(sr_as_rational(SymbolicReal::sqrt7()), NotRational);
  SymbolicReal x = SymbolicReal::sqrt7(-7) * SymbolicReal::sqrt7(7) * SymbolicReal(Rat(5, 3));
  CHECK(sr_as_rational(x) == Rat(5, 3));
}

TEST_CASE("sr_to_float examples") {
  FloatApprox z2 = sr_to_float(SymbolicReal::monomial(Rat(1, 6), 2, 0), 64);
  CHECK(z2.to_double() == doctest::Approx(1.6449340668482264));
  CHECK(z2.error_bound < Rat(1, 1000000000));
  FloatApprox q = sr_to_float(SymbolicReal(Rat(3, 7)), 64);
  CHECK(abs(q.value - Rat(3, 7)) <= q.error_bound);
  CHECK(q.error_bound < Rat(1, Int(1) << 60));
  FloatApprox l = sr_to_float(SymbolicReal::monomial(32, 3, -7), 128);
  CHECK(l.to_double() == doctest::Approx(1.0933430694295336));
  CHECK(sr_to_float(SymbolicReal::pi(), 360).to_decimal(30).substr(0, 20) == "3.141592653589793238");
}

TEST_CASE("sr_to_float and sr_enclose reject unsupported precision") {
  CHECK_THROWS(sr_to_float(SymbolicReal::pi(), 16));
  CHECK_THROWS(sr_to_float(SymbolicReal::pi(), 2000));
}

TEST_CASE("pi enclosure is certified") {
  RatInterval p = pi_interval(300);
  CHECK(p.lo() < p.hi());
  CHECK(p.width() < Rat(1, Int(1) << 290));
  CHECK(p.lo() < Rat(355, 113));
  CHECK(p.hi() > Rat(333, 106));
  RatInterval s = sqrt7_interval(100);
  CHECK(s.lo() * s.lo() <= 7);
  CHECK(s.hi() * s.hi() >= 7);
}

TEST_CASE("property: SymbolicReal ring laws") {
  for (int i = 0; i < kCases; ++i) {
    const SymbolicReal x = random_symbolic(), y = random_symbolic(), z = random_symbolic();
    CHECK(sr_add(x, y) == sr_add(y, x));
    CHECK(sr_mul(x, y) == sr_mul(y, x));
    CHECK(sr_add(sr_add(x, y), z) == sr_add(x, sr_add(y, z)));
    CHECK(sr_mul(sr_mul(x, y), z) == sr_mul(x, sr_mul(y, z)));
    CHECK(sr_mul(x, sr_add(y, z)) == sr_add(sr_mul(x, y), sr_mul(x, z)));
    CHECK(sr_add(x, -x).is_zero());
  }
}

TEST_CASE("property: canonical form") {
  for (int i = 0; i < kCases; ++i) {
    const SymbolicReal x = random_symbolic();
    for (const auto& [key, coeff] : x.terms()) {
      CHECK(!is_zero(coeff));
      CHECK((key.seven_half_power == 0 || key.seven_half_power == 1));
    }
  }
}

TEST_CASE("property: rational embedding round-trips") {
  for (int i = 0; i < kCases; ++i) {
    const Rat q = small_rat(1000, 1000);
    CHECK(sr_as_rational(SymbolicReal(q)) == q);
  }
}

TEST_CASE("property: sr_to_float respects multiplication") {
  for (int i = 0; i < kCases; ++i) {
    const SymbolicReal x = SymbolicReal::monomial(fpp::test::nonzero_rat(), static_cast<int>(uniform(-5, 5)),
                                                  static_cast<int>(uniform(-5, 5)));
    const SymbolicReal y = SymbolicReal::monomial(fpp::test::nonzero_rat(), static_cast<int>(uniform(-5, 5)),
                                                  static_cast<int>(uniform(-5, 5)));
    const FloatApprox fx = sr_to_float(x, 96), fy = sr_to_float(y, 96), fxy = sr_to_float(x * y, 96);
    const Rat bound = fxy.error_bound + abs(fx.value) * fy.error_bound + abs(fy.value) * fx.error_bound +
                      fx.error_bound * fy.error_bound;
    CHECK(abs(fxy.value - fx.value * fy.value) <= bound);
  }
}

TEST_CASE("property: interval arithmetic contains the exact result") {
  for (int i = 0; i < kCases; ++i) {
    const Rat a = small_rat(), b = small_rat(), c = small_rat(), d = small_rat();
    RatInterval x(std::min(a, b), std::max(a, b)), y(std::min(c, d), std::max(c, d));
    const Rat px = x.midpoint(), py = y.midpoint();
    RatInterval prod = x * y;
    CHECK(prod.lo() <= px * py);
    CHECK(px * py <= prod.hi());
    RatInterval sum = x + y;
    CHECK(sum.lo() <= px + py);
    CHECK(px + py <= sum.hi());
    RatInterval r = prod;
    r.round_out(16);
    CHECK(r.lo() <= prod.lo());
    CHECK(r.hi() >= prod.hi());
  }
}

TEST_CASE("SymbolicReal JSON round-trip") {
  for (int i = 0; i < kCases; ++i) {
    const SymbolicReal x = random_symbolic();
    const Json j = to_json(x);
    for (const Json& t : j) {
      CHECK(t.contains("num"));
      CHECK(t.contains("den"));
    }
    CHECK(symbolic_from_json(j) == x);
  }
  CHECK(to_string(SymbolicReal::monomial(32, 3, -7)) == "32*7^(-7/2)*pi^3");
}
