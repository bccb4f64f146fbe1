#pragma once

#include <string>
#include <vector>

#include "kummer/kodaira.hpp"
#include "kummer/mpolar.hpp"
#include "kummer/multivariate.hpp"
#include "kummer/permutation.hpp"
#include "kummer/rational_function.hpp"
#include "kummer/real.hpp"

namespace kummer::family {

// Parameters of the family over the lambda line, all in the variable lambda.
struct LambdaFamily {
  RationalFunction a_of_lambda;
  RationalFunction b_of_lambda;
  RationalFunction d_of_lambda;
  RationalFunction sigma_of_lambda;  // a^3/d - b^2/d + 1
  RationalFunction pi_of_lambda;     // a^3/d
};

const LambdaFamily& lambda_family();

// 2 - 23/(192 l) + 1/(1728 l^2) and (1 + 1/(144 l))^3
RationalFunction sigma_closed_form();
RationalFunction pi_closed_form();

// Throws std::domain_error at the cusp lambda = 0.
mpolar::ModularParams params_of_lambda(const Rational& lambda);

// Maps of the cover nu -> mu' -> mu -> lambda.
struct CoverTower {
  RationalFunction f1;                    // lambda(mu) = -mu^2 + 1/256
  RationalFunction f2_in_square;          // mu = -(mu')^2 + 1/16, as a function of (mu')^2
  RationalFunction f3_squared;            // (mu')^2 = (1/8)(1-nu^2)^2/(1+nu^2)^2
  RationalFunction mu_of_nu;              // f2 o f3, rational
  RationalFunction lambda_of_nu;          // f1 o mu_of_nu
};

const CoverTower& cover_tower();

// (1/16) nu^2 (1-nu^2)^2 / (1+nu^2)^4
RationalFunction lambda_of_nu_closed_form();

// Throw std::domain_error at the poles nu = +-i (only reachable in the complex overload).
Rational lambda_of_nu(const Rational& nu);
Complex lambda_of_nu(const Complex& nu);

// Deck group D8 of the cover, element alpha^i beta^j.
struct DeckElement {
  int i = 0;
  int j = 0;
  RationalFunction base_map;  // in nu
  Permutation label_perm;     // on the six fibre labels

  std::string word() const;
};

DeckElement deck_element(int i, int j);
std::vector<DeckElement> deck_group();
// normal form of g o h
DeckElement multiply(const DeckElement& g, const DeckElement& h);
// Identify a base map among the eight; returns false if none matches.
bool identify_base_map(const RationalFunction& map, int& i, int& j);

Permutation alpha_labels();  // (1524)(36)
Permutation beta_labels();   // (14)(25)(36)

// E1: z^2 = t(t-1)(t-nu^2), E2: E1 with nu -> (nu+1)/(nu-1)
kodaira::WeierstrassFamily e1_model();
kodaira::WeierstrassFamily e2_model();
RationalFunction j_e1();
RationalFunction j_e2();
// (4/27)(nu^4-nu^2+1)^3 / (nu^4 (nu-1)^2 (nu+1)^2)
RationalFunction j_e1_closed_form();

// Kummer affine model u^2 = s(s-1)(s-m^2) t(t-1)(t-nu^2), m = (nu+1)/(nu-1).
template <class T>
struct KummerPoint {
  T nu;
  T s;
  T t;
  T u;
};

enum class Involution { beta, iota, iota_prime };
std::string to_string(Involution which);

// Difference u^2 - rhs at the point.
Rational kummer_residual(const KummerPoint<Rational>& p);
Real kummer_residual(const KummerPoint<Real>& p);
bool on_surface(const KummerPoint<Rational>& p);
// relative tolerance 1e-20 against the size of u^2
bool on_surface(const KummerPoint<Real>& p);

// Throws std::domain_error at a pole of the coordinate map.
KummerPoint<Rational> apply_involution(Involution which, const KummerPoint<Rational>& p);
KummerPoint<Real> apply_involution(Involution which, const KummerPoint<Real>& p);

// Lift (nu, s, t) to the surface when the right-hand side is a rational square.
bool lift_to_surface(const Rational& nu, const Rational& s, const Rational& t, KummerPoint<Rational>& out);
KummerPoint<Real> lift_to_surface(const Real& nu, const Real& s, const Real& t);

// Symbolic check over Q(nu)[s,t,u]: F o map = unit(nu) * F. unit is set when it holds.
using KummerPolynomial = SparsePolynomial<RationalFunction>;
KummerPolynomial kummer_polynomial();
bool preserves_kummer_equation(Involution which, RationalFunction* unit = nullptr);

// Coordinate map as (base map, variable targets, variable scales) on (s, t, u).
struct CoordinateMap {
  RationalFunction base;
  std::vector<std::size_t> target;
  std::vector<RationalFunction> scale;
};
CoordinateMap coordinate_map(Involution which);
CoordinateMap compose(const CoordinateMap& outer, const CoordinateMap& inner);
bool preserves_kummer_equation(const CoordinateMap& map, RationalFunction* unit = nullptr);

}  // namespace kummer::family
