#pragma once

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

// Owning MPFR value with its own precision. Binary ops round to the wider operand precision.
class Real {
 public:
  static constexpr mpfr_prec_t default_precision = 128;

  explicit Real(mpfr_prec_t prec = default_precision);
  Real(double v, mpfr_prec_t prec);
  Real(const Rational& q, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
// 10^e at the given precision
Real pow10(long e, mpfr_prec_t prec);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = Real::default_precision) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const Rational& r, mpfr_prec_t prec) : re(r, prec), im(prec) {}
  Complex(const Rational& r, const Rational& i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

  static Complex polar(const Real& radius, const Real& angle);

  mpfr_prec_t precision() const { return re.precision(); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }

  std::string to_string(int digits = 20) const;
};

Real abs(const Complex& z);
// principal branch
Complex sqrt(const Complex& z);

// p(z) with coefficients low to high
Complex evaluate(const std::vector<Complex>& coeffs, const Complex& z);

// All complex roots by Aberth iteration; throws std::runtime_error on non-convergence.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, mpfr_prec_t prec);

}  // namespace kummer
