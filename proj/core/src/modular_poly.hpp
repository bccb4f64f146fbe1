#pragma once

// Internal: polynomials over Z/p (word-sized p) and over Z/m (big m) for Zassenhaus.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer::detail {

using u64 = std::uint64_t;

// coefficients low to high, reduced in [0,p), no trailing zeros
using PolyP = std::vector<u64>;

struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;

  void trim(PolyP& f) const;
  PolyP reduce(const std::vector<Integer>& f) const;
  PolyP add(const PolyP& a, const PolyP& b) const;
  PolyP sub(const PolyP& a, const PolyP& b) const;
  PolyP mul(const PolyP& a, const PolyP& b) const;
  PolyP scale(const PolyP& a, u64 c) const;
  std::pair<PolyP, PolyP> divmod(const PolyP& a, const PolyP& b) const;
  PolyP rem(const PolyP& a, const PolyP& b) const { return divmod(a, b).second; }
  PolyP monic(const PolyP& a) const;
  PolyP gcd(PolyP a, PolyP b) const;
  // g = s a + t b, g monic
  PolyP xgcd(const PolyP& a, const PolyP& b, PolyP& s, PolyP& t) const;
  PolyP derivative(const PolyP& a) const;
  PolyP powmod(const PolyP& base, const Integer& e, const PolyP& modulus) const;

  // monic squarefree input; returns monic irreducible factors
  std::vector<PolyP> factor_squarefree(const PolyP& f, std::mt19937_64& rng) const;
  // (product of irreducibles of degree d, d)
  std::vector<std::pair<PolyP, int>> distinct_degree(const PolyP& f) const;
  std::vector<PolyP> equal_degree(const PolyP& f, int d, std::mt19937_64& rng) const;
};

// Polynomials over Z/m with big m, coefficients in [0,m).
using PolyZ = std::vector<Integer>;

struct Zm {
  Integer m;

  void trim(PolyZ& f) const;
  PolyZ reduce(const PolyZ& f) const;
  PolyZ add(const PolyZ& a, const PolyZ& b) const;
  PolyZ sub(const PolyZ& a, const PolyZ& b) const;
  PolyZ mul(const PolyZ& a, const PolyZ& b) const;
  PolyZ scale(const PolyZ& a, const Integer& c) const;
  // b must be monic
  std::pair<PolyZ, PolyZ> divmod_monic(const PolyZ& a, const PolyZ& b) const;
  // symmetric representative in (-m/2, m/2]
  PolyZ symmetric(const PolyZ& a) const;
};

PolyZ lift(const PolyP& f);

// Lifts f = lc * prod(factors) mod p to monic factors mod `modulus`, a power of p.
std::vector<PolyZ> hensel_lift(const PolyZ& f, const std::vector<PolyP>& factors, u64 p,
                               const Integer& modulus);

}  // namespace kummer::detail
