#include "kummer/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "modular_poly.hpp"

namespace kummer {

namespace {

using detail::Fp;
using detail::PolyP;
using detail::PolyZ;
using detail::Zm;
using detail::u64;

bool coeff_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t count_factors(const Fp& F, const PolyP& f) {
  std::size_t count = 0;
  for (auto& [g, d] : F.distinct_degree(f)) {
    count += (g.size() - 1) / static_cast<std::size_t>(d);
  }
  return count;
}

Polynomial primitive(const Polynomial& p) { return from_integers(primitive_integer_part(p)); }

// Zassenhaus on a squarefree primitive integer polynomial of degree >= 2.
std::vector<Polynomial> zassenhaus(const PolyZ& F) {
  const std::size_t n = F.size() - 1;
  const Integer& lc = F.back();

  u64 best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (u64 p = 101; tried < 5; ++p) {
    if (!is_prime(p) || mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    Fp Fq{p};
    PolyP f = Fq.reduce(F);
    if (Fq.gcd(f, Fq.derivative(f)).size() != 1) continue;
    std::size_t c = count_factors(Fq, Fq.monic(f));
    ++tried;
    if (best_p == 0 || c < best_count) {
      best_p = p;
      best_count = c;
    }
    if (c == 1) break;
  }
  if (best_count == 1) {
    return {from_integers(F)};
  }

  Fp Fq{best_p};
  std::mt19937_64 rng(0x6b756d6d6572ULL);
  std::vector<PolyP> modular = Fq.factor_squarefree(Fq.monic(Fq.reduce(F)), rng);

  Integer maxc = 0;
  for (const auto& c : F) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = abs(lc) * maxc * Integer(static_cast<unsigned long>(n + 1));
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  Integer modulus = best_p;
  while (modulus <= bound) modulus *= modulus;

  std::vector<PolyZ> lifted = detail::hensel_lift(F, modular, best_p, modulus);
  Zm Z{modulus};

  std::vector<Polynomial> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  Polynomial f = from_integers(F);
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
    do {
      std::vector<Integer> fz = primitive_integer_part(f);
      PolyZ g{fz.back()};
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (pick[i]) g = Z.mul(g, lifted[remaining[i]]);
      }
      g = Z.symmetric(g);
      if (fz[0] != 0) {
        if (g.empty() || g[0] == 0) continue;
        Integer target = fz.back() * fz[0];
        if (!mpz_divisible_p(target.get_mpz_t(), g[0].get_mpz_t())) continue;
      }
      Polynomial cand = primitive(from_integers(g));
      Polynomial quotient;
      if (!divides(cand, f, &quotient)) continue;
      result.push_back(cand);
      f = primitive(quotient);
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (!pick[i]) rest.push_back(remaining[i]);
      }
      remaining = std::move(rest);
      found = true;
      break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (f.degree() > 0) result.push_back(f);
  return result;
}

std::vector<Polynomial> factor_squarefree(const Polynomial& g) {
  if (g.degree() <= 1) return {g.monic()};
  std::vector<Polynomial> out;
  for (auto& h : zassenhaus(primitive_integer_part(g))) out.push_back(h.monic());
  return out;
}

}  // namespace

Place Place::finite(const Polynomial& p) {
  if (p.degree() < 1 || !is_irreducible(p)) {
    throw std::invalid_argument("place needs an irreducible polynomial, got " + p.to_string());
  }
  return Place(p.monic());
}

const Polynomial& Place::minimal_polynomial() const {
  if (is_infinity()) throw std::logic_error("the place at infinity has no minimal polynomial");
  return minimal_polynomial_;
}

std::string Place::to_string(std::string_view var) const {
  if (is_infinity()) return "inf";
  return minimal_polynomial_.to_string(var);
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
  return coeff_less(a.minimal_polynomial_, b.minimal_polynomial_);
}

Factorization factor(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
  Factorization out;
  out.unit = p.leading();
  for (auto& [g, mult] : squarefree_decomposition(p)) {
    for (auto& h : factor_squarefree(g)) out.factors.emplace_back(h, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return coeff_less(a.first, b.first); });
  return out;
}

std::vector<std::pair<Place, int>> irreducible_factors(const Polynomial& p) {
  std::vector<std::pair<Place, int>> out;
  for (auto& [h, mult] : factor(p).factors) out.emplace_back(Place(h), mult);
  return out;
}

bool is_irreducible(const Polynomial& p) {
  if (p.degree() < 1) return false;
  auto f = factor(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

namespace {

int multiplicity(Polynomial p, const Polynomial& m) {
  int k = 0;
  Polynomial q;
  while (!p.is_zero() && divides(m, p, &q)) {
    p = std::move(q);
    ++k;
  }
  return k;
}

}  // namespace

int order_at(const RationalFunction& f, const Place& p) {
  if (f.is_zero()) throw std::invalid_argument("order of the zero function");
  if (p.is_infinity()) return f.den().degree() - f.num().degree();
  const Polynomial& m = p.minimal_polynomial();
  return multiplicity(f.num(), m) - multiplicity(f.den(), m);
}

std::vector<std::pair<Place, int>> divisor(const RationalFunction& f) {
  if (f.is_zero()) throw std::invalid_argument("divisor of the zero function");
  std::vector<std::pair<Place, int>> out;
  for (auto& [pl, k] : irreducible_factors(f.num())) out.emplace_back(pl, k);
  for (auto& [pl, k] : irreducible_factors(f.den())) out.emplace_back(pl, -k);
  int at_inf = order_at(f, Place::infinity());
  if (at_inf != 0) out.emplace_back(Place::infinity(), at_inf);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace kummer
