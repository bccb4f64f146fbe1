#include "kummer/real.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace kummer {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

void widen(Real& a, const Real& b) {
  if (b.precision() > a.precision()) mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(wider(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

Complex Complex::polar(const Real& radius, const Real& angle) {
  return {radius * cos(angle), radius * sin(angle)};
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / den;
  Real i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string Complex::to_string(int digits) const {
  std::string s = re.to_string(digits);
  if (im.sign() < 0) {
    s += " - " + (-im).to_string(digits) + "i";
  } else {
    s += " + " + im.to_string(digits) + "i";
  }
  return s;
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Complex sqrt(const Complex& z) {
  Real r = abs(z);
  Real two(2.0, z.precision());
  Real a = sqrt((r + z.re) / two);
  Real b = sqrt((r - z.re) / two);
  if (z.im.sign() < 0) b = -b;
  return {a, b};
}

Complex evaluate(const std::vector<Complex>& coeffs, const Complex& z) {
  Complex acc(z.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, mpfr_prec_t prec) {
  std::size_t n = coeffs.size();
  while (n > 0 && abs(coeffs[n - 1]).is_zero()) --n;
  if (n < 2) return {};
  std::vector<Complex> p(coeffs.begin(), coeffs.begin() + static_cast<long>(n));
  std::size_t deg = n - 1;
  std::vector<Complex> dp;
  for (std::size_t i = 1; i <= deg; ++i) {
    dp.push_back(p[i] * Real(static_cast<double>(i), prec));
  }

  // Cauchy bound
  Real lead = abs(p[deg]);
  Real radius(1.0, prec);
  for (std::size_t i = 0; i < deg; ++i) {
    Real r = abs(p[i]) / lead;
    if (radius < r + Real(1.0, prec)) radius = r + Real(1.0, prec);
  }
  Real two_pi = Real::pi(prec) * Real(2.0, prec);
  std::vector<Complex> z;
  for (std::size_t k = 0; k < deg; ++k) {
    Real angle = two_pi * Real((static_cast<double>(k) + 0.25) / static_cast<double>(deg), prec);
    z.push_back(Complex::polar(radius * Real(0.5, prec), angle + Real(0.4, prec)));
  }

  Real tol = pow10(-static_cast<long>(static_cast<double>(prec) * 0.30103) + 6, prec);
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst(prec);
    for (std::size_t k = 0; k < deg; ++k) {
      Complex pk = evaluate(p, z[k]);
      if (abs(pk).is_zero()) continue;
      Complex ratio = pk / evaluate(dp, z[k]);
      Complex sum(prec);
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != k) sum += Complex(Real(1.0, prec), Real(prec)) / (z[k] - z[j]);
      }
      Complex one(Real(1.0, prec), Real(prec));
      Complex w = ratio / (one - ratio * sum);
      z[k] -= w;
      Real scale = abs(z[k]);
      if (scale < Real(1.0, prec)) scale = Real(1.0, prec);
      Real rel = abs(w) / scale;
      if (worst < rel) worst = rel;
    }
    if (worst < tol) return z;
  }
  throw std::runtime_error("polynomial root iteration did not converge");
}

}  // namespace kummer
