#include "kummer/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummer {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) {
    throw std::domain_error("rational function with zero denominator");
  }
  if (num.is_zero()) {
    den_ = Polynomial(1L);
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  Rational lc = den.leading();
  if (lc != 1) {
    Polynomial inv(Rational(1) / lc);
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

int RationalFunction::degree() const { return std::max(num_.degree(), den_.degree()); }

Rational RationalFunction::evaluate(const Rational& at) const {
  Rational d = den_.evaluate(at);
  if (d == 0) {
    throw std::domain_error("rational function evaluated at a pole (" + at.get_str() + ")");
  }
  return num_.evaluate(at) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    *this = RationalFunction(num_ + rhs.num_, den_);
  } else {
    *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  // cross-cancel first to keep sizes down
  Polynomial g1 = gcd(num_, rhs.den_);
  Polynomial g2 = gcd(rhs.num_, den_);
  Polynomial n1 = g1.degree() > 0 ? num_ / g1 : num_;
  Polynomial d2 = g1.degree() > 0 ? rhs.den_ / g1 : rhs.den_;
  Polynomial n2 = g2.degree() > 0 ? rhs.num_ / g2 : rhs.num_;
  Polynomial d1 = g2.degree() > 0 ? den_ / g2 : den_;
  *this = RationalFunction(n1 * n2, d1 * d2);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("rational function division by zero");
  }
  return *this *= RationalFunction(rhs.den_, rhs.num_);
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_ == Polynomial(1L)) {
    return num_.to_string(var);
  }
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction pow(const RationalFunction& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::domain_error("negative power of the zero function");
    return RationalFunction(pow(base.den(), -exponent),
                            pow(base.num(), -exponent));
  }
  return RationalFunction(pow(base.num(), exponent),
                          pow(base.den(), exponent));
}

namespace {

// sum c_i p^i q^(m-i)
Polynomial homogenized(const Polynomial& f, const Polynomial& p, const Polynomial& q, int m) {
  Polynomial acc;
  const auto& c = f.coefficients();
  std::vector<Polynomial> qpow(static_cast<std::size_t>(m) + 1);
  qpow[0] = Polynomial(1L);
  for (int i = 1; i <= m; ++i) qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i) - 1] * q;
  Polynomial ppow(1L);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) {
      acc += Polynomial(c[i]) * ppow * qpow[static_cast<std::size_t>(m) - i];
    }
    ppow *= p;
  }
  return acc;
}

}  // namespace

RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner) {
  int m = outer.degree();
  if (m <= 0) return outer;
  const Polynomial& p = inner.num();
  const Polynomial& q = inner.den();
  return RationalFunction(homogenized(outer.num(), p, q, m), homogenized(outer.den(), p, q, m));
}

RationalFunction moebius(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a * d - b * c == 0) {
    throw std::invalid_argument("degenerate Moebius map");
  }
  return RationalFunction(Polynomial({b, a}), Polynomial({d, c}));
}

}  // namespace kummer
