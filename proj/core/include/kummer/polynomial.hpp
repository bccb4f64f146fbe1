#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

// Dense univariate polynomial over Q. coeffs_[i] multiplies x^i; no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);
  Polynomial(long constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial variable();
  static Polynomial monomial(const Rational& c, std::size_t degree);
  // x - r
  static Polynomial linear_root(const Rational& r);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& at) const;
  template <class T>
  T horner(const T& at, const T& zero) const {
    T acc = zero;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + T(*it);
    }
    return acc;
  }

  Polynomial derivative() const;
  Polynomial monic() const;
  // x^deg * p(1/x)
  Polynomial reversed(int as_degree) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, int exponent);

// Euclidean division; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// outer(inner(x))
Polynomial compose(const Polynomial& outer, const Polynomial& inner);

// Exact division test: q*b == a.
bool divides(const Polynomial& b, const Polynomial& a, Polynomial* quotient = nullptr);

// Squarefree decomposition a = c * prod f_i^i with f_i monic, squarefree, pairwise coprime.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& a);

// Multiplies by the lcm of denominators and removes integer content; leading coefficient positive.
std::vector<Integer> primitive_integer_part(const Polynomial& p);
Polynomial from_integers(const std::vector<Integer>& coeffs);

}  // namespace kummer
