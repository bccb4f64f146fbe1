#pragma once

#include <string>
#include <string_view>

#include "kummer/polynomial.hpp"

namespace kummer {

// num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(1L) {}
  RationalFunction(const Rational& c) : num_(c), den_(1L) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1L) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // max(deg num, deg den)
  int degree() const;

  // Throws std::domain_error at a pole.
  Rational evaluate(const Rational& at) const;
  bool has_pole_at(const Rational& at) const { return den_.evaluate(at) == 0; }

  RationalFunction operator-() const { return {-num_, den_}; }
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "x") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& base, int exponent);

// outer(inner(x)), reduced.
RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner);

// Moebius map (a x + b)/(c x + d).
RationalFunction moebius(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

}  // namespace kummer
