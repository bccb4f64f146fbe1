#pragma once

#include <optional>
#include <string>
#include <utility>

#include "kummer/multivariate.hpp"
#include "kummer/polynomial.hpp"
#include "kummer/rational.hpp"
#include "kummer/real.hpp"

namespace kummer::mpolar {

// Weighted parameters (a, b, d) of weights (2, 3, 6).
struct ModularParams {
  Rational a;
  Rational b;
  Rational d;
};

// Weight-zero combinations after scaling d to 1. a is only rational when d is a cube.
struct NormalizedParams {
  Rational a_cubed;    // a^3 / d
  Rational b_squared;  // b^2 / d
  std::optional<Rational> a;  // a / d^(1/3) when d is a rational cube
};

struct SigmaPi {
  Rational sigma;
  Rational pi;
};

// Throws std::domain_error for d == 0 (the cusp).
NormalizedParams normalize(const ModularParams& p);

SigmaPi sigma_pi(const Rational& a, const Rational& b);
SigmaPi sigma_pi(const NormalizedParams& n);

// (a^3 - (b-1)^2)(a^3 - (b+1)^2)
Rational discriminant_delta(const Rational& a, const Rational& b);
Rational discriminant_delta(const NormalizedParams& n);

// (P - 1, P + 1) with P(x) = 4x^3 - 3ax - b
std::pair<Polynomial, Polynomial> fiber_locus(const Rational& a, const Rational& b);

// true iff the six roots of (P-1)(P+1) are distinct, i.e. a^3 != (b +- 1)^2
bool six_distinct_roots(const Rational& a, const Rational& b);

// Numerical roots: first three of P-1, then three of P+1.
std::vector<Complex> fiber_locus_roots(const Rational& a, const Rational& b, mpfr_prec_t prec);

// rational + coeff * sqrt(radicand), radicand with square factors removed
class QuadraticSurd {
 public:
  QuadraticSurd(const Rational& rational = 0) : rational_(rational), coeff_(0), radicand_(1) {}
  QuadraticSurd(const Rational& rational, const Rational& coeff, const Rational& radicand);

  const Rational& rational_part() const { return rational_; }
  const Rational& coefficient() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }
  bool is_rational() const { return coeff_ == 0; }

  QuadraticSurd conjugate() const { return {rational_, -coeff_, radicand_}; }
  // Throws std::invalid_argument when the radicands differ.
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.rational_ == y.rational_ && x.coeff_ == y.coeff_ && x.radicand_ == y.radicand_;
  }

  Complex to_complex(mpfr_prec_t prec) const;
  std::string to_string() const;

 private:
  Rational rational_;
  Rational coeff_;
  Rational radicand_;
};

// Roots of j^2 - sigma j + pi = 0; first = (sigma - sqrt(D))/2, second = (sigma + sqrt(D))/2.
std::pair<QuadraticSurd, QuadraticSurd> j_pair(const SigmaPi& sp);

// Symbolic (a, b) identities; variables ordered (a, b).
using BivariateQ = SparsePolynomial<Rational>;
BivariateQ sigma_polynomial();
BivariateQ pi_polynomial();
BivariateQ delta_polynomial();

}  // namespace kummer::mpolar
