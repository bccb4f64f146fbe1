#include <gtest/gtest.h>

#include <random>

#include "kummer/family.hpp"
#include "kummer/mpolar.hpp"

using namespace kummer;
using namespace kummer::mpolar;

TEST(Normalize, TrivialAndFamily) {
  auto n = normalize({2, 3, 1});
  ASSERT_TRUE(n.a.has_value());
  EXPECT_EQ(*n.a, 2);
  EXPECT_EQ(n.b_squared, 9);

  auto p = family::params_of_lambda(1);
  auto m = normalize(p);
  ASSERT_TRUE(m.a.has_value());
  EXPECT_EQ(*m.a, make_rational(145, 144));
  EXPECT_EQ(m.b_squared, pow(make_rational(647, 1728), 2));
}

TEST(Normalize, CuspRejected) { EXPECT_THROW(normalize({1, 1, 0}), std::domain_error); }

TEST(Normalize, NonCubeHasNoRationalA) {
  auto n = normalize({1, 0, 2});
  EXPECT_FALSE(n.a.has_value());
  EXPECT_EQ(n.a_cubed, make_rational(1, 2));
}

TEST(SigmaPi, Examples) {
  auto s = sigma_pi(0, 0);
  EXPECT_EQ(s.sigma, 1);
  EXPECT_EQ(s.pi, 0);
  s = sigma_pi(1, 1);
  EXPECT_EQ(s.sigma, 1);
  EXPECT_EQ(s.pi, 1);
  s = sigma_pi(normalize(family::params_of_lambda(1)));
  EXPECT_EQ(s.sigma, make_rational(1625, 864));
  EXPECT_EQ(s.pi, pow(make_rational(145, 144), 3));
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant_delta(0, 0), 1);
  EXPECT_EQ(discriminant_delta(1, 0), 0);
}

TEST(Discriminant, SymbolicIdentity) {
  BivariateQ s = sigma_polynomial();
  BivariateQ lhs = s * s - pi_polynomial().scaled(Rational(4));
  EXPECT_EQ(lhs, delta_polynomial());
  EXPECT_FALSE(delta_polynomial().is_zero());
}

TEST(Discriminant, RandomPoints) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 50; ++i) {
    Rational a = make_rational(d(rng), 1 + (d(rng) + 50) % 7);
    Rational b = make_rational(d(rng), 1 + (d(rng) + 50) % 5);
    SigmaPi sp = sigma_pi(a, b);
    EXPECT_EQ(discriminant_delta(a, b), sp.sigma * sp.sigma - 4 * sp.pi);
    EXPECT_EQ(discriminant_delta(a, b) == 0, !six_distinct_roots(a, b));
  }
}

TEST(FiberLocus, Shape) {
  auto [m, p] = fiber_locus(0, 0);
  EXPECT_EQ(m, Polynomial({-1, 0, 0, 4}));
  EXPECT_EQ(p, Polynomial({1, 0, 0, 4}));
  Rational a = make_rational(3, 7), b = make_rational(-5, 2);
  auto [m2, p2] = fiber_locus(a, b);
  EXPECT_EQ(m2.leading(), 4);
  EXPECT_EQ(p2.leading(), 4);
  EXPECT_EQ(m2.coeff(0), -b - 1);
  EXPECT_EQ(p2.coeff(0), -b + 1);
}

TEST(FiberLocus, DistinctIffDiscriminant) {
  EXPECT_FALSE(six_distinct_roots(1, 0));
  EXPECT_FALSE(six_distinct_roots(4, 7));  // 64 = (7+1)^2
  EXPECT_TRUE(six_distinct_roots(2, 1));
}

TEST(FiberLocus, NumericRoots) {
  Rational a = make_rational(1, 3), b = make_rational(2, 5);
  auto roots = fiber_locus_roots(a, b, 128);
  ASSERT_EQ(roots.size(), 6u);
  auto [m, p] = fiber_locus(a, b);
  for (int k = 0; k < 6; ++k) {
    const auto& poly = k < 3 ? m : p;
    std::vector<Complex> c;
    for (const auto& q : poly.coefficients()) c.emplace_back(q, 128);
    EXPECT_LT(abs(evaluate(c, roots[k])).to_double(), 1e-30);
    for (int l = 0; l < k; ++l) EXPECT_GT(abs(roots[k] - roots[l]).to_double(), 1e-3);
  }
}

TEST(JPair, Examples) {
  auto [j1, j2] = j_pair({2, 1});
  EXPECT_TRUE(j1.is_rational());
  EXPECT_EQ(j1, QuadraticSurd(1));
  EXPECT_EQ(j2, QuadraticSurd(1));
  auto [k1, k2] = j_pair({1, 0});
  EXPECT_EQ(k1, QuadraticSurd(0));
  EXPECT_EQ(k2, QuadraticSurd(1));
}

TEST(JPair, VietaFamilyPoint) {
  SigmaPi sp{make_rational(1625, 864), pow(make_rational(145, 144), 3)};
  auto [j1, j2] = j_pair(sp);
  EXPECT_EQ(j1 + j2, QuadraticSurd(sp.sigma));
  EXPECT_EQ(j1 * j2, QuadraticSurd(sp.pi));
  EXPECT_EQ(j1.conjugate(), j2);
}

TEST(JPair, VietaRandom) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-200, 200);
  for (int i = 0; i < 50; ++i) {
    SigmaPi sp{make_rational(d(rng), 1 + (d(rng) + 200) % 9), make_rational(d(rng), 1 + (d(rng) + 200) % 11)};
    auto [j1, j2] = j_pair(sp);
    EXPECT_EQ(j1 + j2, QuadraticSurd(sp.sigma)) << i;
    EXPECT_EQ(j1 * j2, QuadraticSurd(sp.pi)) << i;
  }
}

TEST(QuadraticSurd, Normalization) {
  QuadraticSurd s(0, 1, 12);
  EXPECT_EQ(s.coefficient(), 2);
  EXPECT_EQ(s.radicand(), 3);
  QuadraticSurd r(1, 1, make_rational(9, 4));
  EXPECT_TRUE(r.is_rational());
  EXPECT_EQ(r.rational_part(), make_rational(5, 2));
  EXPECT_THROW(QuadraticSurd(0, 1, 2) + QuadraticSurd(0, 1, 3), std::invalid_argument);
}
