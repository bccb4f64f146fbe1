#include "kummer/rational.hpp"

#include <stdexcept>
#include <string>

namespace kummer {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw std::invalid_argument("empty rational literal");
  }
  s = s.substr(first, last - first + 1);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return make_rational(Integer(s), Integer(1));
    }
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool exact_integer_root(const Integer& z, unsigned degree, Integer& root) {
  if (z < 0 && degree % 2 == 0) {
    return false;
  }
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), degree);
  if (!exact) {
    return false;
  }
  root = r;
  return true;
}

}  // namespace

bool exact_root(const Rational& q, unsigned degree, Rational& root) {
  if (degree == 0) {
    throw std::invalid_argument("root of degree zero");
  }
  Integer num;
  Integer den;
  if (!exact_integer_root(q.get_num(), degree, num) ||
      !exact_integer_root(q.get_den(), degree, den)) {
    return false;
  }
  root = make_rational(num, den);
  return true;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw std::domain_error("negative power of zero");
    }
    return pow(Rational(1) / base, -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(num, den);
}

}  // namespace kummer
