#pragma once

// Seeded generators shared by the property suites. FPP_TEST_SEED overrides the seed.

#include <cstdlib>
#include <random>

#include "fpp/cyclic_algebra.hpp"
#include "fpp/linalg.hpp"

namespace fpp::test {

inline constexpr int kCases = 100;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine = [] {
    const char* env = std::getenv("FPP_TEST_SEED");
    return std::mt19937_64(env ? std::strtoull(env, nullptr, 10) : 20240607ULL);
  }();
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rat small_rat(long bound = 5, long max_den = 4) { return make_rat(uniform(-bound, bound), uniform(1, max_den)); }

inline Rat nonzero_rat(long bound = 5, long max_den = 4) {
  for (;;) {
    Rat q = small_rat(bound, max_den);
    if (!is_zero(q)) return q;
  }
}

/// Random element of Q(zeta_n) with small coefficients; `density` in percent.
inline CycElt random_cyc(int n = 7, long bound = 3, int density = 70) {
  std::vector<Rat> c(static_cast<std::size_t>(n));
  for (auto& x : c)
    if (uniform(1, 100) <= density) x = small_rat(bound, 3);
  return CycElt(n, c);
}

inline CycElt nonzero_cyc(int n = 7) {
  for (;;) {
    CycElt a = random_cyc(n);
    if (!a.is_zero()) return a;
  }
}

/// Random element of K = Q(sqrt(-7)): x + y*lambda.
inline CycElt random_K(long bound = 4) { return CycElt(small_rat(bound, 2)) + CycElt(small_rat(bound, 2)) * lambda(); }

inline CycElt random_real_cyc() {
  CycElt a = random_cyc();
  return a + a.conj();
}

inline AlgElt random_alg(const CycElt& alpha = fpp::alpha()) {
  return AlgElt(alpha, random_cyc(), random_cyc(), random_cyc());
}

inline Mat3<CycElt> random_invertible_matrix() {
  for (;;) {
    Mat3<CycElt> g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = random_cyc(7, 2, 40);
    if (!exact_determinant(g).is_zero()) return g;
  }
}

}  // namespace fpp::test
