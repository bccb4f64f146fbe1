#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kummer/polynomial.hpp"
#include "kummer/rational_function.hpp"

namespace kummer {

class Place;
std::vector<std::pair<Place, int>> irreducible_factors(const Polynomial& p);

// A closed point of P^1 over Q: an irreducible monic polynomial, or infinity.
class Place {
 public:
  enum class Kind { finite, infinity };

  static Place infinity() { return Place(); }
  // Throws std::invalid_argument unless p is irreducible of positive degree.
  static Place finite(const Polynomial& p);
  static Place rational(const Rational& r) { return Place(Polynomial::linear_root(r)); }

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::infinity; }
  const Polynomial& minimal_polynomial() const;
  int degree() const { return is_infinity() ? 1 : minimal_polynomial_.degree(); }

  std::string to_string(std::string_view var = "x") const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.kind_ == b.kind_ && a.minimal_polynomial_ == b.minimal_polynomial_;
  }
  // finite places by (degree, coefficients), infinity last
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place() = default;
  explicit Place(Polynomial monic_irreducible)
      : kind_(Kind::finite), minimal_polynomial_(std::move(monic_irreducible)) {}
  friend std::vector<std::pair<Place, int>> irreducible_factors(const Polynomial& p);

  Kind kind_ = Kind::infinity;
  Polynomial minimal_polynomial_;
};

struct Factorization {
  Rational unit;
  std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible, sorted
};

Factorization factor(const Polynomial& p);

// Throws std::invalid_argument for the zero polynomial; constants give an empty list.
std::vector<std::pair<Place, int>> irreducible_factors(const Polynomial& p);

bool is_irreducible(const Polynomial& p);

// Zero order (positive) or pole order (negative). Throws for f == 0.
int order_at(const RationalFunction& f, const Place& p);

// All places where f has a zero or a pole, with orders, infinity included.
std::vector<std::pair<Place, int>> divisor(const RationalFunction& f);

}  // namespace kummer
