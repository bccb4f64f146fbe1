#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummer/hurwitz.hpp"

namespace kummer::hodge {

using hurwitz::BranchData;

class UnsupportedData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k + l + m - n - r == 2, equivalent to Riemann-Hurwitz for a genus 0 source
bool degree_condition(const BranchData& b);
// degree condition and either l = 2 with y1, y2 in {1, 2, 4} or l = 1 with y1 = 8
bool cy_condition(const BranchData& b);
// Sufficient criterion only: g unramified over 1/256, i.e. m == n.
bool smoothness(const BranchData& b);

struct ZeroFiber {
  int x;
  int components;  // x^2 + 2 (x even) or x^2 + 1 (x odd)
};

struct InfinityFiber {
  int y;
  int components;
  std::vector<int> multiplicities;  // empty when not determined (y = 8)
};

struct QuarterPoint {
  int z;
  int terminal_points;  // two cA_{z-1} points when z > 1
};

struct FiberInventory {
  std::vector<ZeroFiber> zero;
  std::vector<InfinityFiber> infinity;
  std::vector<QuarterPoint> quarter;

  int terminal_singularities() const;
};

FiberInventory fiber_inventory(const BranchData& b);

// x-fibre: x^2 + 2 components for even x, x^2 + 1 for odd x
int zero_fiber_components(int x);
// 20, 9, 1 for y = 1, 2, 4 and 1 for y = 8; throws std::invalid_argument otherwise
int infinity_fiber_components(int y);
// c_j: 19, 8, 0 for y = 1, 2, 4; throws UnsupportedData otherwise
int infinity_correction(int y);

// Both throw UnsupportedData when l != 2 or a y part lies outside {1, 2, 4}.
int h11(const BranchData& b, int s);
int h21(const BranchData& b, int p_g);

struct ReferenceConstants {
  int euler_a2 = 64;
  int h11_a2 = 32;
  int h21_a2 = 0;
  int euler_y2prime = 80;
  int h11_y2prime = 40;
  int h21_y2prime = 0;
};

ReferenceConstants reference_constants();

// One outcome per distinct (s, p_g) among the realizing tuples.
struct Outcome {
  int s = 0;
  int p_g = 0;
  std::vector<int> genera;  // sorted
  std::vector<hurwitz::ComponentReport> components;
  hurwitz::HurwitzCover tuple;  // first realizing tuple
  int tuple_count = 0;
  std::optional<int> h11;
  std::optional<int> h21;
  std::optional<int> euler;
};

struct CYReport {
  BranchData data;
  bool cy = false;
  bool smooth_by_criterion = false;
  FiberInventory inventory;
  std::vector<Outcome> outcomes;
  bool ambiguous = false;         // more than one (s, p_g) outcome
  bool search_truncated = false;  // tuple search hit its limit
  bool explicit_tuple = false;
  std::string unsupported;        // non-empty when Hodge numbers are outside the formulas
};

struct SearchLimits {
  std::size_t max_tuples = 64;
  long long budget = 20000000;
};

// Throws std::invalid_argument for inconsistent branch data.
CYReport analyze(const BranchData& b, const SearchLimits& limits = {});
// Explicit monodromy of g. Throws std::invalid_argument for an invalid or disconnected cover.
CYReport analyze(const hurwitz::HurwitzCover& g);

// All CY branch data with n <= max_degree, sorted by (n, x, y, z).
std::vector<BranchData> enumerate_cy(int max_degree);

// All partitions of n, each descending, in reverse lexicographic order.
std::vector<std::vector<int>> partitions(int n);

}  // namespace kummer::hodge
