#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "kummer/factor.hpp"

using namespace kummer;

namespace {

const Polynomial x = Polynomial::variable();

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long k : c) v.emplace_back(k);
  return Polynomial(v);
}

Polynomial expand(const Factorization& f) {
  Polynomial out(f.unit);
  for (auto& [g, k] : f.factors) out *= pow(g, k);
  return out;
}

}  // namespace

TEST(Factor, NuFourthMinusOne) {
  auto fs = irreducible_factors(pow(x, 4) - Polynomial(1L));
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].first.minimal_polynomial(), P({-1, 1}));
  EXPECT_EQ(fs[1].first.minimal_polynomial(), P({1, 1}));
  EXPECT_EQ(fs[2].first.minimal_polynomial(), P({1, 0, 1}));
  for (auto& [pl, k] : fs) EXPECT_EQ(k, 1);
}

TEST(Factor, ConstantAndZero) {
  EXPECT_TRUE(irreducible_factors(Polynomial(7L)).empty());
  EXPECT_THROW(irreducible_factors(Polynomial()), std::invalid_argument);
}

TEST(Factor, WeierstrassDiscriminantOfE1) {
  // 16 * disc(t(t-1)(t-v^2)) = 16 v^4 (v-1)^2 (v+1)^2
  Polynomial v2 = x * x;
  Polynomial disc = Polynomial(16L) * v2 * v2 * pow(v2 - Polynomial(1L), 2);
  auto fs = irreducible_factors(disc);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].first.minimal_polynomial(), P({-1, 1}));
  EXPECT_EQ(fs[0].second, 2);
  EXPECT_EQ(fs[1].first.minimal_polynomial(), P({0, 1}));
  EXPECT_EQ(fs[1].second, 4);
  EXPECT_EQ(fs[2].first.minimal_polynomial(), P({1, 1}));
  EXPECT_EQ(fs[2].second, 2);
}

TEST(Factor, SwinnertonDyerIsIrreducible) {
  // minimal polynomial of sqrt2+sqrt3+sqrt5: splits into linear/quadratic factors mod every prime
  Polynomial s = P({576, 0, -960, 0, 352, 0, -40, 0, 1});
  EXPECT_TRUE(is_irreducible(s));
}

TEST(Factor, RationalCoefficientsAndUnit) {
  Polynomial p = Polynomial(make_rational(3, 4)) * (x - Polynomial(make_rational(1, 2))) *
                 (x * x - Polynomial(2L));
  Factorization f = factor(p);
  EXPECT_EQ(f.unit, make_rational(3, 4));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(expand(f), p);
}

TEST(Factor, TowerNumerators) {
  // lambda - 1/256 over a common denominator: -(v^2-2v-1)^2 (v^2+2v-1)^2 / (256 (v^2+1)^4)
  Polynomial a = P({-1, -2, 1});
  Polynomial b = P({-1, 2, 1});
  Polynomial p = Polynomial(-1L) * pow(a, 2) * pow(b, 2);
  auto fs = irreducible_factors(p);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].second, 2);
  EXPECT_EQ(fs[1].second, 2);
}

TEST(Factor, RandomProductsRoundTrip) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> c(-6, 6);
  std::uniform_int_distribution<int> d(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial p(1L);
    int total = 0;
    for (int k = 0; k < 4; ++k) {
      std::vector<Rational> v(static_cast<std::size_t>(d(rng)) + 1);
      for (auto& e : v) e = c(rng);
      v.back() = 1 + (c(rng) + 6) % 3;
      Polynomial g(v);
      p *= g;
      total += g.degree();
    }
    Factorization f = factor(p);
    EXPECT_EQ(expand(f), p);
    int sum = 0;
    for (auto& [g, k] : f.factors) {
      sum += g.degree() * k;
      EXPECT_TRUE(g.leading() == 1);
    }
    EXPECT_EQ(sum, total);
    EXPECT_EQ(sum, p.degree());
  }
}

TEST(Factor, DegreeTwentyFourWithinSeconds) {
  // product of cyclotomic-type and random factors of total degree 24
  Polynomial p = (pow(x, 12) - Polynomial(1L)) * (pow(x, 6) + Polynomial(3L) * x + Polynomial(1L)) *
                 (pow(x, 6) - Polynomial(2L) * pow(x, 3) + Polynomial(5L));
  auto start = std::chrono::steady_clock::now();
  Factorization f = factor(p);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(expand(f), p);
  // x^12-1 has 6 cyclotomic factors
  EXPECT_EQ(f.factors.size(), 8u);
  EXPECT_LT(secs, 5.0);
}
