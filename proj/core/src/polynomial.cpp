#include "kummer/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kummer {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) {
    throw std::domain_error("leading coefficient of the zero polynomial");
  }
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return {};
  }
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v[i - 1] = coeffs_[i] * static_cast<long>(i);
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    return {};
  }
  Polynomial r = *this;
  Rational lc = leading();
  for (auto& c : r.coeffs_) {
    c /= lc;
  }
  return r;
}

Polynomial Polynomial::reversed(int as_degree) const {
  if (as_degree < degree()) {
    throw std::invalid_argument("reversal degree below polynomial degree");
  }
  std::vector<Rational> v(static_cast<std::size_t>(as_degree) + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[static_cast<std::size_t>(as_degree) - i] = coeffs_[i];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) {
    c = -c;
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (!unit) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative power of a polynomial");
  Polynomial result(1L);
  Polynomial b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  if (a.degree() < b.degree()) {
    return {Polynomial(), a};
  }
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  Rational inv_lc = Rational(1) / bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] * inv_lc;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k - db + j] -= q * bc[j];
    }
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
  Polynomial acc;
  const auto& c = outer.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * inner + Polynomial(*it);
  }
  return acc;
}

bool divides(const Polynomial& b, const Polynomial& a, Polynomial* quotient) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& a) {
  // Yun
  std::vector<std::pair<Polynomial, int>> out;
  if (a.degree() < 1) return out;
  Polynomial f = a.monic();
  Polynomial fp = f.derivative();
  Polynomial g = gcd(f, fp);
  Polynomial b = f / g;
  Polynomial c = fp / g;
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial h = gcd(b, d);
    if (h.degree() > 0) out.emplace_back(h, i);
    b = b / h;
    c = d / h;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Integer> primitive_integer_part(const Polynomial& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("primitive part of the zero polynomial");
  }
  Integer den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> z;
  z.reserve(p.coefficients().size());
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (z.back() < 0) content = -content;
  for (auto& v : z) v /= content;
  return z;
}

Polynomial from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

}  // namespace kummer
