#include "modular_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummer::detail {

u64 Fp::pow(u64 a, u64 e) const {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Fp::inv(u64 a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow(a, p - 2);
}

void Fp::trim(PolyP& f) const {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP Fp::reduce(const std::vector<Integer>& f) const {
  PolyP out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  }
  trim(out);
  return out;
}

PolyP Fp::add(const PolyP& a, const PolyP& b) const {
  PolyP out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

PolyP Fp::sub(const PolyP& a, const PolyP& b) const {
  PolyP out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

PolyP Fp::mul(const PolyP& a, const PolyP& b) const {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = add(out[i + j], mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

PolyP Fp::scale(const PolyP& a, u64 c) const {
  PolyP out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], c);
  trim(out);
  return out;
}

std::pair<PolyP, PolyP> Fp::divmod(const PolyP& a, const PolyP& b) const {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  PolyP r = a;
  PolyP q(a.size() - b.size() + 1, 0);
  u64 il = inv(b.back());
  std::size_t db = b.size() - 1;
  for (std::size_t k = r.size(); k-- > db;) {
    if (!r[k]) continue;
    u64 c = mul(r[k], il);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = sub(r[k - db + j], mul(c, b[j]));
    }
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

PolyP Fp::monic(const PolyP& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

PolyP Fp::gcd(PolyP a, PolyP b) const {
  while (!b.empty()) {
    PolyP r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

PolyP Fp::xgcd(const PolyP& a, const PolyP& b, PolyP& s, PolyP& t) const {
  PolyP r0 = a, r1 = b;
  PolyP s0 = {1}, s1 = {};
  PolyP t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    PolyP s2 = sub(s0, mul(q, s1));
    PolyP t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return {};
  }
  u64 il = inv(r0.back());
  s = scale(s0, il);
  t = scale(t0, il);
  return scale(r0, il);
}

PolyP Fp::derivative(const PolyP& a) const {
  if (a.size() <= 1) return {};
  PolyP out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(a[i], i % p);
  trim(out);
  return out;
}

PolyP Fp::powmod(const PolyP& base, const Integer& e, const PolyP& modulus) const {
  PolyP result = {1};
  result = rem(result, modulus);
  PolyP b = rem(base, modulus);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), modulus);
  }
  return result;
}

std::vector<std::pair<PolyP, int>> Fp::distinct_degree(const PolyP& f_in) const {
  std::vector<std::pair<PolyP, int>> out;
  PolyP f = monic(f_in);
  const PolyP x = {0, 1};
  PolyP h = rem(x, f);
  Integer pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = powmod(h, pz, f);
    PolyP g = gcd(sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

std::vector<PolyP> Fp::equal_degree(const PolyP& f, int d, std::mt19937_64& rng) const {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) return {f};
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  for (;;) {
    PolyP a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (a.size() <= 1) continue;
    PolyP g = gcd(a, f);
    if (g.size() <= 1) {
      PolyP b = powmod(a, e, f);
      g = gcd(sub(b, PolyP{1}), f);
    }
    if (g.size() > 1 && g.size() < f.size()) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(divmod(f, g).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<PolyP> Fp::factor_squarefree(const PolyP& f, std::mt19937_64& rng) const {
  std::vector<PolyP> out;
  for (auto& [g, d] : distinct_degree(f)) {
    auto parts = equal_degree(monic(g), d, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

void Zm::trim(PolyZ& f) const {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyZ Zm::reduce(const PolyZ& f) const {
  PolyZ out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  }
  trim(out);
  return out;
}

PolyZ Zm::add(const PolyZ& a, const PolyZ& b) const {
  PolyZ out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
  }
  return reduce(out);
}

PolyZ Zm::sub(const PolyZ& a, const PolyZ& b) const {
  PolyZ out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
  }
  return reduce(out);
}

PolyZ Zm::mul(const PolyZ& a, const PolyZ& b) const {
  if (a.empty() || b.empty()) return {};
  PolyZ out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return reduce(out);
}

PolyZ Zm::scale(const PolyZ& a, const Integer& c) const {
  PolyZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return reduce(out);
}

std::pair<PolyZ, PolyZ> Zm::divmod_monic(const PolyZ& a, const PolyZ& b) const {
  if (b.empty() || b.back() != 1) throw std::domain_error("divmod_monic needs a monic divisor");
  if (a.size() < b.size()) return {{}, a};
  PolyZ r = a;
  PolyZ q(a.size() - b.size() + 1, Integer(0));
  std::size_t db = b.size() - 1;
  for (std::size_t k = r.size(); k-- > db;) {
    mpz_fdiv_r(r[k].get_mpz_t(), r[k].get_mpz_t(), m.get_mpz_t());
    if (r[k] == 0) continue;
    Integer c = r[k];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] -= c * b[j];
    }
  }
  r.resize(db);
  return {reduce(q), reduce(r)};
}

PolyZ Zm::symmetric(const PolyZ& a) const {
  PolyZ out = reduce(a);
  Integer half = m / 2;
  for (auto& c : out) {
    if (c > half) c -= m;
  }
  return out;
}

PolyZ lift(const PolyP& f) {
  PolyZ out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = Integer(static_cast<unsigned long>(f[i]));
  return out;
}

namespace {

PolyP product(const Fp& F, const std::vector<PolyP>& fs, std::size_t lo, std::size_t hi) {
  PolyP out = {1};
  for (std::size_t i = lo; i < hi; ++i) out = F.mul(out, fs[i]);
  return out;
}

PolyZ make_monic(const Zm& Z, const PolyZ& f) {
  Integer inv;
  if (!mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), Z.m.get_mpz_t())) {
    throw std::domain_error("leading coefficient not invertible in Hensel lifting");
  }
  return Z.scale(f, inv);
}

void lift_node(const PolyZ& f, const std::vector<PolyP>& fs, std::size_t lo, std::size_t hi,
               u64 p, const Integer& modulus, std::vector<PolyZ>& out) {
  Zm top{modulus};
  if (hi - lo == 1) {
    out.push_back(make_monic(top, top.reduce(f)));
    return;
  }
  Fp F{p};
  std::size_t mid = lo + (hi - lo) / 2;
  u64 lc = mpz_fdiv_ui(f.back().get_mpz_t(), p);
  PolyP g0 = F.scale(product(F, fs, lo, mid), lc);
  PolyP h0 = product(F, fs, mid, hi);
  PolyP s0, t0;
  PolyP one = F.xgcd(g0, h0, s0, t0);
  if (one.size() != 1) throw std::logic_error("Hensel factors not coprime mod p");

  Integer m = p;
  PolyZ g = lift(g0), h = lift(h0), s = lift(s0), t = lift(t0);
  while (m < modulus) {
    Integer m2 = m * m;
    Zm Z{m2};
    PolyZ e = Z.sub(Z.reduce(f), Z.mul(g, h));
    auto [q, r] = Z.divmod_monic(Z.mul(s, e), h);
    PolyZ g1 = Z.add(g, Z.add(Z.mul(t, e), Z.mul(q, g)));
    PolyZ h1 = Z.add(h, r);
    PolyZ b = Z.sub(Z.add(Z.mul(s, g1), Z.mul(t, h1)), PolyZ{Integer(1)});
    auto [c, d] = Z.divmod_monic(Z.mul(s, b), h1);
    PolyZ s1 = Z.sub(s, d);
    PolyZ t1 = Z.sub(t, Z.add(Z.mul(t, b), Z.mul(c, g1)));
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
    m = m2;
  }
  if (m != modulus) throw std::logic_error("Hensel modulus must be p^(2^k)");
  lift_node(g, fs, lo, mid, p, modulus, out);
  lift_node(h, fs, mid, hi, p, modulus, out);
}

}  // namespace

std::vector<PolyZ> hensel_lift(const PolyZ& f, const std::vector<PolyP>& factors, u64 p,
                               const Integer& modulus) {
  std::vector<PolyZ> out;
  if (factors.empty()) return out;
  lift_node(f, factors, 0, factors.size(), p, modulus, out);
  return out;
}

}  // namespace kummer::detail
