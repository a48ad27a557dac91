#include <doctest.h>

#include <numeric>

#include "fpp/singularities.hpp"
#include "support.hpp"

using namespace fpp;
using fpp::test::kCases;
using fpp::test::uniform;

namespace {

CyclicSingularity random_singularity(int max_n = 50) {
  for (;;) {
    const int n = static_cast<int>(uniform(2, max_n));
    const int q = static_cast<int>(uniform(1, n - 1));
    if (std::gcd(n, q) == 1) return {n, q};
  }
}

std::vector<CyclicSingularity> repeat(CyclicSingularity s, int times) { return std::vector<CyclicSingularity>(static_cast<std::size_t>(times), s); }

}  // namespace

TEST_CASE("Hirzebruch-Jung strings") {
  CHECK(hj_expand({7, 3}).self_intersections == std::vector<int>{-3, -2, -2});
  CHECK(hj_expand({7, 1}).self_intersections == std::vector<int>{-7});
  CHECK(hj_expand({3, 2}).self_intersections == std::vector<int>{-2, -2});
  CHECK(hj_expand({3, 1}).self_intersections == std::vector<int>{-3});
  CHECK(hj_expand({7, 5}).self_intersections == std::vector<int>{-2, -2, -3});
  CHECK(to_string(hj_expand({7, 3})) == "(-3)(-2)(-2)");
  CHECK_THROWS(CyclicSingularity(7, 7));
  CHECK_THROWS(CyclicSingularity(6, 2));
  CHECK_THROWS(chain_from_self_intersections({-1, -2}));
}

TEST_CASE("property: HJ strings round-trip and have determinant n") {
  for (int n = 2; n <= 50; ++n)
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const HJChain c = hj_expand({n, q});
      CHECK(continued_fraction_value(c) == make_rat(n, q));
      CHECK(abs(exact_determinant(c.intersection_matrix)) == n);
      CHECK(exact_equal(chain_from_self_intersections(c.self_intersections).intersection_matrix, c.intersection_matrix));
    }
}

TEST_CASE("rotation types") {
  CHECK(singularity_type_from_rotation({7, 1}, {7, 3}) == CyclicSingularity(7, 3));
  CHECK(singularity_type_from_rotation({7, 2}, {7, 6}) == CyclicSingularity(7, 3));
  CHECK(singularity_type_from_rotation({3, 1}, {3, 2}) == CyclicSingularity(3, 2));
  CHECK(singularity_type_from_rotation({21, 7}, {21, 14}) == CyclicSingularity(3, 2));
  CHECK_THROWS_AS(singularity_type_from_rotation({7, 0}, {7, 3}), NotPrimitive);
  CHECK(CyclicSingularity(7, 5).canonical() == CyclicSingularity(7, 3));
}

TEST_CASE("Dedekind sums and signature defects") {
  CHECK(dedekind_sum(1, 3) == Rat(1, 18));
  CHECK(dedekind_sum(2, 3) == Rat(-1, 18));
  CHECK(dedekind_sum(3, 7) == Rat(-1, 14));
  CHECK(signature_defect({2, 1}) == 0);
  CHECK(signature_defect({3, 2}) == Rat(2, 9));
  CHECK(signature_defect({7, 3}) == Rat(2, 7));
}

TEST_CASE("property: Dedekind reciprocity") {
  for (long n = 1; n <= 50; ++n)
    for (long q = 1; q <= 50; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const Rat rhs = Rat(-1, 4) + (make_rat(q, n) + make_rat(n, q) + make_rat(1, n * q)) / 12;
      CHECK(dedekind_sum(q, n) + dedekind_sum(n, q) == rhs);
    }
}

TEST_CASE("property: s(q, n) depends on q mod n and is odd in q") {
  for (int i = 0; i < kCases; ++i) {
    const CyclicSingularity s = random_singularity();
    CHECK(dedekind_sum(s.q + s.n, s.n) == dedekind_sum(s.q, s.n));
    CHECK(dedekind_sum(s.n - s.q, s.n) == -dedekind_sum(s.q, s.n));
  }
}

TEST_CASE("heights of the two quotients") {
  CHECK(euler_height(x_gamma()) == Rat(3, 7));
  CHECK(signature_height(x_gamma()) == Rat(1, 7));
  CHECK(euler_height(x_gamma_tilde()) == Rat(1, 7));
  CHECK(signature_height(x_gamma_tilde()) == Rat(1, 21));
  CHECK(check_cover_multiplicativity(3, 1, x_gamma(), 7));
  CHECK(check_cover_multiplicativity(3, 1, x_gamma_tilde(), 21));
  CHECK_FALSE(check_cover_multiplicativity(3, 1, x_gamma(), 21));
}

TEST_CASE("property: heights are multiplicative in covers of a smooth point set") {
  for (int i = 0; i < kCases; ++i) {
    OrbifoldSurface x{"X", fpp::test::small_rat(20, 3), fpp::test::small_rat(20, 3), {}};
    const long points = uniform(0, 4);
    for (long p = 0; p < points; ++p) x.points.push_back({"P" + std::to_string(p), random_singularity(12)});
    for (long deg : {7L, 3L, 21L}) {
      const Rat e = euler_height(x) * deg, s = signature_height(x) * deg;
      CHECK(check_cover_multiplicativity(e, s, x, deg));
      CHECK_FALSE(check_cover_multiplicativity(e + 1, s, x, deg));
    }
  }
}

TEST_CASE("resolved invariants") {
  ResolvedInvariants r = resolve_invariants(x_gamma());
  CHECK(r.euler == 12);
  CHECK(r.signature == -8);
  CHECK(r.blowups == 9);
  ResolvedInvariants t = resolve_invariants(x_gamma_tilde());
  CHECK(t.euler == 12);
  CHECK(t.signature == -8);
  CHECK(t.blowups == 9);
}

TEST_CASE("branch point solver") {
  BranchSearch s = solve_branch_data(3, 1, {CyclicSingularity(7, 3)}, Rat(1, 7), Rat(1, 21), 12);
  REQUIRE(s.solutions.size() == 1);
  CHECK(s.solutions.front() == repeat({3, 2}, 3));
  CHECK(s.euler_candidates.size() > 1);

  BranchSearch small = solve_branch_data(3, 1, {CyclicSingularity(7, 3)}, Rat(1, 7), Rat(1, 21), 2);
  REQUIRE(small.euler_candidates.size() == 1);
  CHECK(small.euler_candidates.front() == repeat({2, 1}, 4));
  CHECK(small.solutions.empty());
  CHECK_THROWS(solve_branch_data(3, 1, {}, 0, 0, 1));
}

TEST_CASE("chain divisor system") {
  const HJChain c = hj_expand({7, 3});
  CHECK(chain_divisor_system(c, 3, {0, 0, 0}) == std::vector<Rat>{Rat(-9, 7), Rat(-6, 7), Rat(-3, 7)});
  CHECK(chain_divisor_system(c, 0, {0, 0, 0}) == std::vector<Rat>{0, 0, 0});
  CHECK_THROWS(chain_divisor_system(c, 3, {0, 0}));
}

TEST_CASE("property: chain divisor system solves M a = rhs") {
  for (int i = 0; i < kCases; ++i) {
    const HJChain c = hj_expand(random_singularity(30));
    const int k = static_cast<int>(uniform(0, 5));
    std::vector<Rat> d;
    for (std::size_t j = 0; j < c.length(); ++j) d.push_back(fpp::test::small_rat());
    const std::vector<Rat> a = chain_divisor_system(c, k, d);
    for (std::size_t row = 0; row < c.length(); ++row) {
      Rat lhs = 0;
      for (std::size_t col = 0; col < c.length(); ++col)
        lhs += c.intersection_matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) * a[col];
      CHECK(lhs == Rat(k * (-c.self_intersections[row] - 2)) - d[row]);
    }
  }
}
