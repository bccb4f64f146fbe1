#pragma once

// Small sparse multivariate polynomials, enough for symbolic identity checks in a handful of
// variables with coefficients in Q or Q(x).

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

template <class Coeff>
class SparsePolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit SparsePolynomial(std::size_t nvars) : nvars_(nvars) {}
  SparsePolynomial(std::size_t nvars, const Coeff& constant) : nvars_(nvars) {
    add_term(Exponents(nvars, 0), constant);
  }

  static SparsePolynomial variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index");
    Exponents e(nvars, 0);
    e[index] = 1;
    SparsePolynomial p(nvars);
    p.add_term(e, Coeff(1L));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(const Exponents& e, const Coeff& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second == Coeff()) terms_.erase(it);
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePolynomial operator*(const SparsePolynomial& o) const {
    check(o);
    SparsePolynomial r(nvars_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }
  SparsePolynomial scaled(const Coeff& c) const {
    SparsePolynomial r(nvars_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Apply f to every coefficient.
  template <class F>
  SparsePolynomial map_coefficients(F&& f) const {
    SparsePolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  // Substitute x_i -> scale[i] * x_{target[i]}.
  SparsePolynomial permute_scale(const std::vector<std::size_t>& target,
                                 const std::vector<Coeff>& scale) const {
    if (target.size() != nvars_ || scale.size() != nvars_) {
      throw std::invalid_argument("substitution arity mismatch");
    }
    SparsePolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents ne(nvars_, 0);
      Coeff k = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        ne[target[i]] += e[i];
        for (int j = 0; j < e[i]; ++j) k *= scale[i];
      }
      r.add_term(ne, k);
    }
    return r;
  }

 private:
  void check(const SparsePolynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  }

  std::size_t nvars_;
  std::map<Exponents, Coeff> terms_;
};

template <class Coeff>
SparsePolynomial<Coeff> pow(const SparsePolynomial<Coeff>& base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative power of a polynomial");
  SparsePolynomial<Coeff> r(base.nvars(), Coeff(1L));
  for (int i = 0; i < exponent; ++i) r = r * base;
  return r;
}

}  // namespace kummer
