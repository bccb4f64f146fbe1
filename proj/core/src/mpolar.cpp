#include "kummer/mpolar.hpp"

#include <stdexcept>

namespace kummer::mpolar {

NormalizedParams normalize(const ModularParams& p) {
  if (p.d == 0) {
    throw std::domain_error("d = 0 is the cusp of the moduli space");
  }
  NormalizedParams n;
  n.a_cubed = p.a * p.a * p.a / p.d;
  n.b_squared = p.b * p.b / p.d;
  Rational root;
  if (exact_root(p.d, 3, root)) {
    n.a = p.a / root;
  }
  return n;
}

SigmaPi sigma_pi(const Rational& a, const Rational& b) {
  Rational a3 = a * a * a;
  return {a3 - b * b + 1, a3};
}

SigmaPi sigma_pi(const NormalizedParams& n) { return {n.a_cubed - n.b_squared + 1, n.a_cubed}; }

Rational discriminant_delta(const Rational& a, const Rational& b) {
  Rational a3 = a * a * a;
  return (a3 - (b - 1) * (b - 1)) * (a3 - (b + 1) * (b + 1));
}

Rational discriminant_delta(const NormalizedParams& n) {
  SigmaPi sp = sigma_pi(n);
  return sp.sigma * sp.sigma - 4 * sp.pi;
}

std::pair<Polynomial, Polynomial> fiber_locus(const Rational& a, const Rational& b) {
  Polynomial P({-b, Rational(-3 * a), Rational(0), Rational(4)});
  return {P - Polynomial(1L), P + Polynomial(1L)};
}

bool six_distinct_roots(const Rational& a, const Rational& b) { return discriminant_delta(a, b) != 0; }

std::vector<Complex> fiber_locus_roots(const Rational& a, const Rational& b, mpfr_prec_t prec) {
  auto [minus, plus] = fiber_locus(a, b);
  std::vector<Complex> out;
  for (const Polynomial* p : {&minus, &plus}) {
    std::vector<Complex> c;
    for (const auto& q : p->coefficients()) c.emplace_back(q, prec);
    auto r = polynomial_roots(c, prec);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

namespace {

// Splits q = s^2 * r with r free of rational square factors found by trial division.
void extract_square(const Rational& q, Rational& s, Rational& r) {
  // make the radicand integral: q = n/d = (n d)/d^2
  Integer num = q.get_num() * q.get_den();
  Integer outside = 1;
  Integer sign = num < 0 ? -1 : 1;
  Integer m = abs(num);
  Integer root;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    outside = root;
    m = 1;
  } else {
    for (unsigned long p = 2; p < 10000; ++p) {
      Integer pp = p * p;
      while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
        m /= pp;
        outside *= p;
      }
    }
  }
  s = make_rational(outside, q.get_den());
  r = Rational(sign * m);
}

}  // namespace

QuadraticSurd::QuadraticSurd(const Rational& rational, const Rational& coeff, const Rational& radicand)
    : rational_(rational), coeff_(coeff), radicand_(1) {
  if (coeff_ == 0 || radicand == 0) {
    coeff_ = 0;
    return;
  }
  Rational s, r;
  extract_square(radicand, s, r);
  coeff_ *= s;
  if (r == 1) {
    rational_ += coeff_;
    coeff_ = 0;
  } else {
    radicand_ = r;
  }
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational()) return {x.rational_ + y.rational_, y.coeff_, y.radicand_};
  if (y.is_rational()) return {x.rational_ + y.rational_, x.coeff_, x.radicand_};
  if (x.radicand_ != y.radicand_) throw std::invalid_argument("surds with different radicands");
  return {x.rational_ + y.rational_, x.coeff_ + y.coeff_, x.radicand_};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational()) return {x.rational_ * y.rational_, x.rational_ * y.coeff_, y.radicand_};
  if (y.is_rational()) return {x.rational_ * y.rational_, y.rational_ * x.coeff_, x.radicand_};
  if (x.radicand_ != y.radicand_) throw std::invalid_argument("surds with different radicands");
  return {x.rational_ * y.rational_ + x.coeff_ * y.coeff_ * x.radicand_,
          x.rational_ * y.coeff_ + x.coeff_ * y.rational_, x.radicand_};
}

Complex QuadraticSurd::to_complex(mpfr_prec_t prec) const {
  Complex z(rational_, prec);
  if (is_rational()) return z;
  Real root = sqrt(abs(Real(radicand_, prec)));
  Real c(coeff_, prec);
  if (radicand_ < 0) {
    z.im = c * root;
  } else {
    z.re += c * root;
  }
  return z;
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return rational_.get_str();
  std::string s;
  if (rational_ != 0) s = rational_.get_str() + (coeff_ < 0 ? " - " : " + ");
  else if (coeff_ < 0) s = "-";
  Rational c = abs(coeff_);
  if (c != 1) s += c.get_str() + "*";
  return s + "sqrt(" + radicand_.get_str() + ")";
}

std::pair<QuadraticSurd, QuadraticSurd> j_pair(const SigmaPi& sp) {
  Rational disc = sp.sigma * sp.sigma - 4 * sp.pi;
  Rational half = sp.sigma / 2;
  return {QuadraticSurd(half, make_rational(-1, 2), disc), QuadraticSurd(half, make_rational(1, 2), disc)};
}

namespace {

BivariateQ var(std::size_t i) { return BivariateQ::variable(2, i); }
BivariateQ constant(long c) { return BivariateQ(2, Rational(c)); }

}  // namespace

BivariateQ sigma_polynomial() {
  BivariateQ a = var(0), b = var(1);
  return a * a * a - b * b + constant(1);
}

BivariateQ pi_polynomial() {
  BivariateQ a = var(0);
  return a * a * a;
}

BivariateQ delta_polynomial() {
  BivariateQ a = var(0), b = var(1);
  BivariateQ a3 = a * a * a;
  BivariateQ bm = b - constant(1);
  BivariateQ bp = b + constant(1);
  return (a3 - bm * bm) * (a3 - bp * bp);
}

}  // namespace kummer::mpolar
