#pragma once

#include <string>
#include <vector>

#include "kummer/factor.hpp"
#include "kummer/rational_function.hpp"

namespace kummer::kodaira {

// y^2 = x^3 + a2 x^2 + a4 x + a6 over Q(v)
struct WeierstrassFamily {
  RationalFunction a2;
  RationalFunction a4;
  RationalFunction a6;
};

struct CInvariants {
  RationalFunction c4;
  RationalFunction c6;
  RationalFunction delta;  // (c4^3 - c6^2) / 1728
};

CInvariants c_invariants(const WeierstrassFamily& w);

// c4^3 / (1728 delta): 1 where c6 = 0, 0 where c4 = 0. Throws for a zero discriminant.
RationalFunction j_invariant(const WeierstrassFamily& w);

enum class FiberType { I_n, I_n_star, II, III, IV, II_star, III_star, IV_star };

struct KodairaFiber {
  Place place;
  FiberType type;
  int n = 0;  // for I_n and I_n*
  // valuations of the minimal model at the place
  int v_c4 = 0;
  int v_c6 = 0;
  int v_delta = 0;

  std::string name() const;
};

// Used for identically zero c4 or c6.
inline constexpr int infinite_valuation = 1 << 20;

// Standard characteristic-zero table on minimal valuations. Returns false for a smooth fibre.
bool lookup(int v_c4, int v_c6, int v_delta, FiberType& type, int& n);

std::string fiber_name(FiberType type, int n);

// Singular fibres at every place including infinity, sorted by place. Throws std::invalid_argument
// when the discriminant vanishes identically.
std::vector<KodairaFiber> classify(const WeierstrassFamily& w);

// Euler number contribution e(F) of a fibre type; sums to 12 for a rational elliptic surface.
int euler_number(FiberType type, int n);

}  // namespace kummer::kodaira
