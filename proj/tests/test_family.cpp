#include <gtest/gtest.h>

#include <random>

#include "kummer/family.hpp"
#include "kummer/mpolar.hpp"

using namespace kummer;
using namespace kummer::family;

namespace {

const RationalFunction v = RationalFunction::variable();

Rational random_rational(std::mt19937& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST(LambdaFamily, ClosedForms) {
  const auto& f = lambda_family();
  EXPECT_EQ(f.sigma_of_lambda, sigma_closed_form());
  EXPECT_EQ(f.pi_of_lambda, pi_closed_form());
}

TEST(LambdaFamily, ParamsAtOne) {
  auto p = params_of_lambda(1);
  EXPECT_EQ(p.a, make_rational(145, 144));
  EXPECT_EQ(p.b, make_rational(647, 1728));
  EXPECT_EQ(p.d, 1);
  auto sp = mpolar::sigma_pi(mpolar::normalize(p));
  EXPECT_EQ(sp.sigma, lambda_family().sigma_of_lambda.evaluate(1));
  EXPECT_EQ(sp.pi, lambda_family().pi_of_lambda.evaluate(1));
  EXPECT_THROW(params_of_lambda(0), std::domain_error);
}

TEST(LambdaFamily, NormalizedMatchesFamilyAtRandomPoints) {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    Rational l = random_rational(rng, 40);
    if (l == 0) continue;
    auto sp = mpolar::sigma_pi(mpolar::normalize(params_of_lambda(l)));
    EXPECT_EQ(sp.sigma, sigma_closed_form().evaluate(l));
    EXPECT_EQ(sp.pi, pi_closed_form().evaluate(l));
  }
}

TEST(Tower, Identity) {
  EXPECT_EQ(cover_tower().lambda_of_nu, lambda_of_nu_closed_form());
  EXPECT_EQ(cover_tower().lambda_of_nu.degree(), 8);
}

TEST(Tower, Cusps) {
  for (long n : {0L, 1L, -1L}) EXPECT_EQ(lambda_of_nu(Rational(n)), 0);
  EXPECT_EQ(order_at(cover_tower().lambda_of_nu, Place::infinity()), 2);
}

TEST(Tower, QuarterPreimages) {
  Real s2 = sqrt(Real(2.0, 160));
  Real one(1.0, 160);
  for (const Real& re : {one + s2, one - s2, s2 - one, -(one + s2)}) {
    Complex z = lambda_of_nu(Complex(re, Real(160)));
    EXPECT_LT(abs(z - Complex(make_rational(1, 256), 160)).to_double(), 1e-30);
  }
}

TEST(Tower, PoleAtI) {
  Complex i(Real(0.0, 128), Real(1.0, 128));
  EXPECT_THROW(lambda_of_nu(i), std::domain_error);
  EXPECT_THROW(lambda_of_nu(-i), std::domain_error);
}

TEST(Deck, Generators) {
  auto a = deck_element(1, 0);
  EXPECT_EQ(a.base_map, (v - 1) / (v + 1));
  EXPECT_EQ(a.label_perm, Permutation::parse("(1524)(36)", 6));
  auto b = deck_element(0, 1);
  EXPECT_EQ(b.base_map, -v);
  EXPECT_EQ(b.label_perm, Permutation::parse("(14)(25)(36)", 6));
  auto e = deck_element(0, 0);
  EXPECT_EQ(e.base_map, v);
  EXPECT_TRUE(e.label_perm.is_identity());
  EXPECT_EQ(e.word(), "id");
}

TEST(Deck, Relations) {
  auto a = deck_element(1, 0), b = deck_element(0, 1);
  auto bab = multiply(multiply(b, a), b);
  auto ainv = deck_element(3, 0);
  EXPECT_EQ(bab.base_map, ainv.base_map);
  EXPECT_EQ(compose(b.base_map, compose(a.base_map, b.base_map)), ainv.base_map);
  EXPECT_EQ(b.label_perm * a.label_perm * b.label_perm, ainv.label_perm);
  auto a4 = multiply(multiply(a, a), multiply(a, a));
  EXPECT_EQ(a4.base_map, v);
  EXPECT_EQ(multiply(b, b).base_map, v);
}

TEST(Deck, MultiplicationTable) {
  auto g = deck_group();
  ASSERT_EQ(g.size(), 8u);
  for (const auto& x : g) {
    for (const auto& y : g) {
      auto xy = multiply(x, y);
      EXPECT_EQ(xy.base_map, compose(x.base_map, y.base_map)) << x.word() << " " << y.word();
      EXPECT_EQ(xy.label_perm, x.label_perm * y.label_perm) << x.word() << " " << y.word();
      int i = -1, j = -1;
      ASSERT_TRUE(identify_base_map(compose(x.base_map, y.base_map), i, j));
      EXPECT_EQ(i, xy.i);
      EXPECT_EQ(j, xy.j);
    }
  }
  for (std::size_t p = 0; p < g.size(); ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      EXPECT_FALSE(g[p].base_map == g[q].base_map);
      EXPECT_FALSE(g[p].label_perm == g[q].label_perm);
    }
  }
}

TEST(Deck, LambdaInvariant) {
  const auto& l = cover_tower().lambda_of_nu;
  for (const auto& e : deck_group()) EXPECT_EQ(compose(l, e.base_map), l) << e.word();
}

TEST(Elliptic, JFormula) {
  EXPECT_EQ(j_e1(), j_e1_closed_form());
  auto e1 = e1_model();
  EXPECT_EQ(e1.a2, -(1 + v * v));
  EXPECT_EQ(e1.a4, v * v);
  EXPECT_TRUE(e1.a6.is_zero());
}

TEST(Elliptic, E2IsPrecomposed) {
  RationalFunction m = (v + 1) / (v - 1);
  EXPECT_EQ(j_e2(), compose(j_e1(), m));
}

TEST(Elliptic, CrossFamilyVieta) {
  const auto& l = cover_tower().lambda_of_nu;
  const auto& f = lambda_family();
  EXPECT_EQ(j_e1() + j_e2(), compose(f.sigma_of_lambda, l));
  EXPECT_EQ(j_e1() * j_e2(), compose(f.pi_of_lambda, l));
}

TEST(Kummer, BetaAndIotaPreserveEquation) {
  RationalFunction unit;
  ASSERT_TRUE(preserves_kummer_equation(Involution::beta, &unit));
  EXPECT_EQ(unit, pow((v - 1) / (v + 1), 6));
  ASSERT_TRUE(preserves_kummer_equation(Involution::iota, &unit));
  EXPECT_EQ(unit, RationalFunction(1L));
}

TEST(Kummer, PrintedIotaPrimeDoesNotPreserveEquation) {
  // the printed fibre coordinates belong to beta o iota, whose base map is alpha^-1
  EXPECT_FALSE(preserves_kummer_equation(Involution::iota_prime));
  auto bi = compose(coordinate_map(Involution::beta), coordinate_map(Involution::iota));
  EXPECT_TRUE(preserves_kummer_equation(bi));
  EXPECT_EQ(bi.base, deck_element(3, 0).base_map);
  auto ib = compose(coordinate_map(Involution::iota), coordinate_map(Involution::beta));
  RationalFunction unit;
  ASSERT_TRUE(preserves_kummer_equation(ib, &unit));
  EXPECT_EQ(ib.base, coordinate_map(Involution::iota_prime).base);
  EXPECT_EQ(unit, pow((v - 1) / (v + 1), 6));
}

TEST(Kummer, BaseMapsMatchDeckWords) {
  // alpha = phi o iota' and alpha o beta = phi o iota at the level of base maps
  EXPECT_EQ(coordinate_map(Involution::iota_prime).base, deck_element(1, 0).base_map);
  EXPECT_EQ(coordinate_map(Involution::iota).base, deck_element(1, 1).base_map);
  EXPECT_EQ(coordinate_map(Involution::beta).base, deck_element(0, 1).base_map);
}

TEST(Kummer, InvolutionsSquareToIdentity) {
  for (auto which : {Involution::beta, Involution::iota}) {
    auto m = coordinate_map(which);
    auto mm = compose(m, m);
    EXPECT_EQ(mm.base, v);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(mm.target[k], k);
      EXPECT_EQ(mm.scale[k], RationalFunction(1L));
    }
  }
}

TEST(Kummer, IotaExample) {
  KummerPoint<Rational> p{2, 5, 7, 11};
  auto q = apply_involution(Involution::iota, p);
  EXPECT_EQ(q.nu, 3);
  EXPECT_EQ(q.s, 7);
  EXPECT_EQ(q.t, 5);
  EXPECT_EQ(q.u, 11);
}

TEST(Kummer, PolesFlagged) {
  EXPECT_THROW(apply_involution(Involution::beta, KummerPoint<Rational>{-1, 1, 1, 1}), std::domain_error);
  EXPECT_THROW(apply_involution(Involution::iota, KummerPoint<Rational>{1, 1, 1, 1}), std::domain_error);
  EXPECT_THROW(apply_involution(Involution::iota_prime, KummerPoint<Rational>{0, 1, 1, 1}), std::domain_error);
}

TEST(Kummer, RandomFloatingPoints) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  int checked = 0;
  while (checked < 20) {
    Real nu(d(rng), 128), s(d(rng), 128), t(d(rng), 128);
    KummerPoint<Real> p;
    try {
      p = lift_to_surface(nu, s, t);
    } catch (const std::domain_error&) {
      continue;
    }
    ASSERT_TRUE(on_surface(p));
    auto b = apply_involution(Involution::beta, p);
    EXPECT_TRUE(on_surface(b));
    auto bb = apply_involution(Involution::beta, b);
    EXPECT_LT(abs(bb.nu - p.nu).to_double() + abs(bb.s - p.s).to_double() + abs(bb.u - p.u).to_double(), 1e-25);
    auto i = apply_involution(Involution::iota, p);
    EXPECT_TRUE(on_surface(i));
    ++checked;
  }
}

TEST(Kummer, RationalPoints) {
  // points with t in {0, 1} lie on u = 0
  KummerPoint<Rational> p;
  ASSERT_TRUE(lift_to_surface(3, make_rational(2, 7), 1, p));
  EXPECT_EQ(p.u, 0);
  EXPECT_TRUE(on_surface(apply_involution(Involution::beta, p)));
  EXPECT_TRUE(on_surface(apply_involution(Involution::iota, p)));
  EXPECT_FALSE(lift_to_surface(3, 2, 5, p) && !on_surface(p));
}
