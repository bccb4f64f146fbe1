#include <gtest/gtest.h>

#include <random>

#include "kummer/factor.hpp"
#include "kummer/polynomial.hpp"
#include "kummer/rational.hpp"
#include "kummer/rational_function.hpp"

using namespace kummer;

namespace {

const RationalFunction X = RationalFunction::variable();

RationalFunction random_rf(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> c(-9, 9);
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<Rational> v(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : v) x = make_rational(c(rng), 1 + (c(rng) + 9) % 4);
      Polynomial p(v);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RationalFunction(poly(false), poly(true));
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_EQ(parse_rational(" -257/256 "), make_rational(-257, 256));
  EXPECT_THROW(parse_rational("1/2x"), std::invalid_argument);
  Rational r;
  EXPECT_TRUE(exact_root(make_rational(-8, 27), 3, r));
  EXPECT_EQ(r, make_rational(-2, 3));
  EXPECT_FALSE(exact_root(Rational(2), 2, r));
}

TEST(Polynomial, Arithmetic) {
  Polynomial x = Polynomial::variable();
  Polynomial p = x * x - Polynomial(1L);
  auto [q, r] = divmod(p, x - Polynomial(1L));
  EXPECT_EQ(q, x + Polynomial(1L));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(p, x * x + Polynomial(2L) * x + Polynomial(1L)), x + Polynomial(1L));
  EXPECT_EQ(compose(x * x, x + Polynomial(1L)), x * x + Polynomial(2L) * x + Polynomial(1L));
  EXPECT_EQ(p.to_string("v"), "v^2 - 1");
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_THROW(divmod(p, Polynomial()), std::domain_error);
}

TEST(Polynomial, SquarefreeDecomposition) {
  Polynomial x = Polynomial::variable();
  Polynomial a = x - Polynomial(1L);
  Polynomial b = x * x + Polynomial(1L);
  auto sf = squarefree_decomposition(Polynomial(3L) * a * pow(b, 3));
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].first, a);
  EXPECT_EQ(sf[0].second, 1);
  EXPECT_EQ(sf[1].first, b);
  EXPECT_EQ(sf[1].second, 3);
}

TEST(RationalFunction, CanonicalAndArithmetic) {
  RationalFunction f(Polynomial({Rational(-2), Rational(2)}), Polynomial({Rational(-2), Rational(0), Rational(2)}));
  // (2x-2)/(2x^2-2) = 1/(x+1)
  EXPECT_EQ(f.num(), Polynomial(1L));
  EXPECT_EQ(f.den(), Polynomial({Rational(1), Rational(1)}));
  EXPECT_EQ(f * (X + 1), RationalFunction(1L));
  EXPECT_EQ(f - f, RationalFunction());
  EXPECT_THROW(f.evaluate(-1), std::domain_error);
  EXPECT_EQ(f.evaluate(1), make_rational(1, 2));
  EXPECT_THROW(RationalFunction(Polynomial(1L), Polynomial()), std::domain_error);
}

TEST(Compose, IdentityAndSquare) {
  RationalFunction f = (X * X + 3) / (X - 2);
  EXPECT_EQ(compose(X, f), f);
  EXPECT_EQ(compose(f, X), f);
  EXPECT_EQ(compose(X * X, X + 1), X * X + 2 * X + 1);
  EXPECT_EQ(compose(RationalFunction(make_rational(5, 7)), f), RationalFunction(make_rational(5, 7)));
}

TEST(Compose, CoverTower) {
  RationalFunction f1 = -(X * X) + make_rational(1, 256);
  // mu = -(mu')^2 + 1/16 with (mu')^2 = (1/8)(1-v^2)^2/(1+v^2)^2
  RationalFunction mu = make_rational(1, 16) - make_rational(1, 8) * pow((1 - X * X) / (1 + X * X), 2);
  RationalFunction expected = make_rational(1, 16) * X * X * pow(1 - X * X, 2) / pow(1 + X * X, 4);
  EXPECT_EQ(compose(f1, mu), expected);
}

TEST(Compose, RoundTripRandom) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int trial = 0; trial < 30; ++trial) {
    RationalFunction f = random_rf(rng, 4);
    RationalFunction g = random_rf(rng, 4);
    RationalFunction fg = compose(f, g);
    int checked = 0;
    for (int k = 0; checked < 20 && k < 200; ++k) {
      Rational q = make_rational(c(rng), 1 + (c(rng) + 50) % 7);
      if (g.has_pole_at(q)) continue;
      Rational gq = g.evaluate(q);
      if (f.has_pole_at(gq) || fg.has_pole_at(q)) continue;
      EXPECT_EQ(fg.evaluate(q), f.evaluate(gq));
      ++checked;
    }
    EXPECT_EQ(checked, 20);
  }
}

TEST(OrderAt, Examples) {
  EXPECT_EQ(order_at(X * X * X, Place::rational(0)), 3);
  EXPECT_EQ(order_at(1 / X, Place::infinity()), 1);
  RationalFunction j = make_rational(4, 27) * pow(pow(X, 4) - X * X + 1, 3) /
                       (pow(X, 4) * pow(X - 1, 2) * pow(X + 1, 2));
  EXPECT_EQ(order_at(j, Place::rational(0)), -4);
  EXPECT_EQ(order_at(j, Place::infinity()), -4);
  EXPECT_EQ(order_at(j, Place::rational(1)), -2);
  EXPECT_THROW(order_at(RationalFunction(), Place::infinity()), std::invalid_argument);
}

TEST(OrderAt, DegreeWeightedSumVanishes) {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction f = random_rf(rng, 5);
    if (f.is_zero()) continue;
    int total = 0;
    for (auto& [place, k] : divisor(f)) total += place.degree() * k;
    EXPECT_EQ(total, 0) << f.to_string();
  }
  // unweighted sum does not vanish for non-rational places
  RationalFunction g = X * X + 1;
  EXPECT_EQ(order_at(g, Place::finite(Polynomial({Rational(1), Rational(0), Rational(1)}))), 1);
  EXPECT_EQ(order_at(g, Place::infinity()), -2);
}

TEST(PlaceTest, Validation) {
  EXPECT_THROW(Place::finite(Polynomial({Rational(-1), Rational(0), Rational(1)})), std::invalid_argument);
  EXPECT_THROW(Place::finite(Polynomial(3L)), std::invalid_argument);
  Place p = Place::finite(Polynomial({Rational(2), Rational(0), Rational(2)}));
  EXPECT_EQ(p.minimal_polynomial(), Polynomial({Rational(1), Rational(0), Rational(1)}));
  EXPECT_TRUE(Place::rational(5) < Place::infinity());
  EXPECT_THROW(Place::infinity().minimal_polynomial(), std::logic_error);
}
