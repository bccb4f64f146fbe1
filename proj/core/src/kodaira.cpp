#include "kummer/kodaira.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummer::kodaira {

CInvariants c_invariants(const WeierstrassFamily& w) {
  RationalFunction b2 = 4 * w.a2;
  RationalFunction b4 = 2 * w.a4;
  RationalFunction b6 = 4 * w.a6;
  RationalFunction c4 = b2 * b2 - 24 * b4;
  RationalFunction c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6;
  RationalFunction delta = (c4 * c4 * c4 - c6 * c6) / RationalFunction(1728L);
  return {c4, c6, delta};
}

RationalFunction j_invariant(const WeierstrassFamily& w) {
  CInvariants c = c_invariants(w);
  if (c.delta.is_zero()) throw std::invalid_argument("singular Weierstrass family: discriminant is zero");
  return c.c4 * c.c4 * c.c4 / (1728 * c.delta);
}

bool lookup(int v4, int v6, int vd, FiberType& type, int& n) {
  n = 0;
  if (vd == 0) return false;
  if (v4 == 0) {
    type = FiberType::I_n;
    n = vd;
    return true;
  }
  if (vd == 6) {
    type = FiberType::I_n_star;
    return true;
  }
  if (vd > 6 && v4 == 2) {
    type = FiberType::I_n_star;
    n = vd - 6;
    return true;
  }
  switch (vd) {
    case 2: type = FiberType::II; return true;
    case 3: type = FiberType::III; return true;
    case 4: type = FiberType::IV; return true;
    case 8: type = FiberType::IV_star; return true;
    case 9: type = FiberType::III_star; return true;
    case 10: type = FiberType::II_star; return true;
    default: break;
  }
  throw std::logic_error("valuations (" + std::to_string(v4) + "," + std::to_string(v6) + "," +
                         std::to_string(vd) + ") match no Kodaira type");
}

std::string fiber_name(FiberType type, int n) {
  switch (type) {
    case FiberType::I_n: return "I" + std::to_string(n);
    case FiberType::I_n_star: return "I" + std::to_string(n) + "*";
    case FiberType::II: return "II";
    case FiberType::III: return "III";
    case FiberType::IV: return "IV";
    case FiberType::II_star: return "II*";
    case FiberType::III_star: return "III*";
    case FiberType::IV_star: return "IV*";
  }
  return "?";
}

std::string KodairaFiber::name() const { return fiber_name(type, n); }

int euler_number(FiberType type, int n) {
  switch (type) {
    case FiberType::I_n: return n;
    case FiberType::I_n_star: return n + 6;
    case FiberType::II: return 2;
    case FiberType::III: return 3;
    case FiberType::IV: return 4;
    case FiberType::IV_star: return 8;
    case FiberType::III_star: return 9;
    case FiberType::II_star: return 10;
  }
  return 0;
}

namespace {

int valuation(const RationalFunction& f, const Place& p) {
  return f.is_zero() ? infinite_valuation : order_at(f, p);
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void add_places(const RationalFunction& f, std::vector<Place>& out) {
  if (f.is_zero()) return;
  for (auto& [pl, k] : divisor(f)) out.push_back(pl);
}

}  // namespace

std::vector<KodairaFiber> classify(const WeierstrassFamily& w) {
  CInvariants c = c_invariants(w);
  if (c.delta.is_zero()) throw std::invalid_argument("singular Weierstrass family: discriminant is zero");

  std::vector<Place> candidates{Place::infinity()};
  add_places(c.delta, candidates);
  add_places(c.c4, candidates);
  add_places(c.c6, candidates);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<KodairaFiber> out;
  for (const auto& p : candidates) {
    int v4 = valuation(c.c4, p);
    int v6 = valuation(c.c6, p);
    int vd = valuation(c.delta, p);
    int k = std::min({floor_div(v4, 4), floor_div(v6, 6), floor_div(vd, 12)});
    if (v4 != infinite_valuation) v4 -= 4 * k;
    if (v6 != infinite_valuation) v6 -= 6 * k;
    vd -= 12 * k;
    KodairaFiber f{p, FiberType::I_n, 0, v4, v6, vd};
    if (lookup(v4, v6, vd, f.type, f.n)) out.push_back(f);
  }
  return out;
}

}  // namespace kummer::kodaira
