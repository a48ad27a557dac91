#include <doctest.h>

#include "fpp/dimension_formula.hpp"
#include "fpp/json_io.hpp"
#include "support.hpp"

using namespace fpp;
using fpp::test::kCases;
using fpp::test::uniform;

namespace {

ClassDataset fixture(const std::string& name) { return dataset_from_json(read_json_file(std::string(FPP_DATA_DIR) + "/" + name)); }

}  // namespace

TEST_CASE("R coefficients") {
  for (int k = 1; k <= 10; ++k) CHECK(R_coefficient(2, k, {}) == CycElt(make_rat((3 * k - 1) * (3 * k - 2), 2)));
  const CycElt z = CycElt::zeta(7);
  for (int k = 1; k <= 5; ++k) {
    const CycElt expected = ((CycElt(1) - z) * (CycElt(1) - z.pow(3))).inverse();
    CHECK(R_coefficient(0, k, {z, z.pow(3)}) == expected);
  }
  CHECK_THROWS_AS(R_coefficient(0, 2, {CycElt(1), z}), EigenvalueOne);
}

TEST_CASE("datasets") {
  const ClassDataset g = build_gamma_dataset();
  const ClassDataset gt = build_gamma_tilde_dataset();
  CHECK(g.classes.size() == 19);
  CHECK(gt.classes.size() == 13);
  for (const auto& c : g.classes) CHECK_NOTHROW(c.validate());
  for (const auto& c : gt.classes) CHECK_NOTHROW(c.validate());
  FixedPointClass bad;
  bad.r = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("dimensions") {
  const ClassDataset g = build_gamma_dataset();
  const ClassDataset gt = build_gamma_tilde_dataset();
  CHECK(dimension(g, 2) == 1);
  CHECK(dimension(g, 3) == 4);
  CHECK(dimension(gt, 2) == 1);
  // the expected plurigenus here is 1; the formula gives 2 (see report entry dimension.gamma_tilde_k3)
  CHECK(dimension(gt, 3) == 2);

  ClassDataset identity_only = g;
  identity_only.classes.resize(1);
  CHECK_THROWS_AS(dimension(identity_only, 2), NotAnInteger);
}

TEST_CASE("fixture files match the in-process derivation") {
  CHECK(to_json(fixture("gamma.json")) == to_json(build_gamma_dataset()));
  CHECK(to_json(fixture("gamma_tilde.json")) == to_json(build_gamma_tilde_dataset()));
}

TEST_CASE("property: dimensions are integral and Galois invariant") {
  const ClassDataset g = build_gamma_dataset();
  const ClassDataset gt = build_gamma_tilde_dataset();
  for (int i = 0; i < kCases; ++i) {
    int s = 0;
    do s = static_cast<int>(uniform(1, 20));
    while (s % 3 == 0 || s % 7 == 0);
    const int k = static_cast<int>(uniform(2, 6));
    const ClassDataset& ds = (i % 2 == 0) ? g : gt;
    const long d = dimension(ds, k);
    CHECK(d >= 0);
    CHECK(dimension(galois_conjugate(ds, s), k) == d);
    CHECK(dimension_sum(galois_conjugate(ds, s), k) == dimension_sum(ds, k));
  }
}

TEST_CASE("normalization search") {
  const auto candidates = normalization_search(3);
  CHECK(candidates.size() == 49);
  int integral = 0;
  for (const auto& c : candidates) {
    if (!c.all_integral()) continue;
    ++integral;
    CHECK(c.j_exponent_7 == 1);
    CHECK(*c.gamma2 == 1);
    CHECK(*c.gamma3 == 4);
    CHECK(*c.gamma_tilde2 == 1);
    CHECK(*c.gamma_tilde3 == 2);
    CHECK(c.distance() == 1);
  }
  // nu1 nu2 = 1 at (3,2) points, so the order-3 exponent never matters
  CHECK(integral == 7);
}
