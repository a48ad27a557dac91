#include <doctest.h>

#include <algorithm>

#include "fpp/json_io.hpp"
#include "fpp/surface.hpp"
#include "support.hpp"

using namespace fpp;
using fpp::test::kCases;
using fpp::test::uniform;

namespace {

SurfaceInvariants from_file(const std::string& name) {
  return invariants_from_json(read_json_file(std::string(FPP_DATA_DIR) + "/" + name));
}

}  // namespace

TEST_CASE("ball quotient invariants") {
  SurfaceInvariants x = ball_quotient_invariants(3, 0);
  CHECK(x.c1_sq == 9);
  CHECK(x.chi == 1);
  CHECK(x.signature == 1);
  CHECK(x.p_g == 0);
  CHECK(x.plurigenera.at(2) == 10);
  CHECK(x.plurigenera.at(3) == 28);
  CHECK(x.consistent());
  CHECK_THROWS(ball_quotient_invariants(0, 0));
}

TEST_CASE("property: ball quotient invariants are consistent") {
  for (int i = 0; i < kCases; ++i) {
    const Rat c2 = 3 * uniform(1, 50);
    const SurfaceInvariants s = ball_quotient_invariants(c2, uniform(0, 3));
    CHECK(s.consistent());
    CHECK(s.c1_sq == 3 * s.c2);
    SurfaceInvariants broken = s;
    broken.p_g += 1;
    CHECK_FALSE(broken.consistent());
  }
}

TEST_CASE("invariants from topology") {
  SurfaceInvariants r = invariants_from_topology(12, -8, 0, 0, {{2, 1}, {3, 4}});
  CHECK(r.c1_sq == 0);
  CHECK(r.chi == 1);
  CHECK(r.consistent());
  SurfaceInvariants p2 = invariants_from_topology(3, 1, 0, 0, {{2, 0}, {3, 0}});
  CHECK(p2.c1_sq == 9);
}

TEST_CASE("fake projective plane predicate") {
  const SurfaceInvariants x = ball_quotient_invariants(3, 0);
  CHECK(is_fake_projective_plane(x, 2));
  CHECK_FALSE(is_fake_projective_plane(x, 1));
  CHECK_FALSE(is_fake_projective_plane(ball_quotient_invariants(6, 0), 2));
  CHECK_FALSE(is_fake_projective_plane(from_file("projective_plane.json"), kKodairaMinusInfinity));
}

TEST_CASE("Kodaira classification of the four surfaces") {
  KodairaResult fake = kodaira_classify(from_file("fake_plane.json"));
  CHECK(fake.kappa == 2);
  CHECK(is_fake_projective_plane(fake.invariants, fake.kappa));

  KodairaResult xg = kodaira_classify(from_file("x_gamma_resolved.json"));
  CHECK(xg.kappa == 1);
  CHECK(xg.invariants.minimal);
  CHECK(xg.trace.back().find("minimal") != std::string::npos);

  KodairaResult xgt = kodaira_classify(from_file("x_gamma_tilde_resolved.json"));
  CHECK(xgt.kappa == 1);
  CHECK(xgt.invariants.minimal);

  KodairaResult plane = kodaira_classify(from_file("projective_plane.json"));
  CHECK(plane.kappa == kKodairaMinusInfinity);
  CHECK(kodaira_to_string(plane.kappa) == "-inf");
}

TEST_CASE("classification fails loudly") {
  SurfaceInvariants s = invariants_from_topology(12, -8, 1, 1, {{2, 1}, {3, 1}});
  CHECK_THROWS_AS(kodaira_classify(s), Ambiguous);
  s.plurigenera.erase(3);
  CHECK_THROWS_AS(kodaira_classify(s), std::invalid_argument);
}

TEST_CASE("elliptic fibrations") {
  for (const EllipticFibration& f : {fibration_x_gamma(), fibration_x_gamma_tilde()}) {
    CHECK(f.expected_c2 == 12);
    CHECK(fibration_euler_check(f.fibers, f.expected_c2));
    const AccountingReport acc = fiber_component_accounting(f.fibers, f.exceptional_curves);
    CHECK(acc.ok);
    CHECK(acc.problems.empty());
  }
  CHECK(to_string(fibration_x_gamma().fibers.front()) == "I_9");
}

TEST_CASE("fibration fixtures match the builders") {
  CHECK(to_json(fibration_from_json(read_json_file(std::string(FPP_DATA_DIR) + "/fibration_gamma.json"))) ==
        to_json(fibration_x_gamma()));
  CHECK(to_json(fibration_from_json(read_json_file(std::string(FPP_DATA_DIR) + "/fibration_gamma_tilde.json"))) ==
        to_json(fibration_x_gamma_tilde()));
}

TEST_CASE("property: any single-fiber mutation breaks a check") {
  const std::vector<EllipticFibration> base{fibration_x_gamma(), fibration_x_gamma_tilde()};
  for (int i = 0; i < kCases; ++i) {
    EllipticFibration f = base[static_cast<std::size_t>(i % 2)];
    auto& fiber = f.fibers[static_cast<std::size_t>(uniform(0, static_cast<long>(f.fibers.size()) - 1))];
    switch (uniform(0, 2)) {
      case 0:  // change the type by one
        if (fiber.kind == KodairaFiber::Kind::I && fiber.n > 1) --fiber.n;
        else {
          fiber.kind = KodairaFiber::Kind::I;
          ++fiber.n;
        }
        break;
      case 1:  // drop a component
        if (!fiber.components.empty()) fiber.components.pop_back();
        else fiber.components.push_back("stray");
        break;
      default:  // duplicate a component of another fiber
        if (fiber.kind == KodairaFiber::Kind::I && !f.exceptional_curves.empty()) {
          fiber.components.push_back(f.exceptional_curves.back().label);
          ++fiber.n;
        } else {
          fiber.kind = KodairaFiber::Kind::I;
          fiber.n = 1;
        }
    }
    const bool euler_ok = fibration_euler_check(f.fibers, f.expected_c2);
    const bool accounting_ok = fiber_component_accounting(f.fibers, f.exceptional_curves).ok;
    CHECK_FALSE((euler_ok && accounting_ok));
  }
}

TEST_CASE("curves of self-intersection -3 may not lie in fibers") {
  EllipticFibration f = fibration_x_gamma();
  const auto it = std::find_if(f.exceptional_curves.begin(), f.exceptional_curves.end(),
                               [](const ExceptionalCurve& c) { return c.self_intersection <= -3; });
  REQUIRE(it != f.exceptional_curves.end());
  f.fibers.back().components.push_back(it->label);
  CHECK_FALSE(fiber_component_accounting(f.fibers, f.exceptional_curves).ok);
}
