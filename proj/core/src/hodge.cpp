#include "kummer/hodge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace kummer::hodge {

bool degree_condition(const BranchData& b) { return b.k() + b.l() + b.m() - b.n - b.r == 2; }

bool cy_condition(const BranchData& b) {
  if (!hurwitz::validate(b).empty() || !degree_condition(b)) return false;
  auto ok = [](int y) { return y == 1 || y == 2 || y == 4; };
  if (b.l() == 2) return ok(b.y[0]) && ok(b.y[1]);
  return b.l() == 1 && b.y[0] == 8;
}

bool smoothness(const BranchData& b) { return b.m() == b.n; }

int zero_fiber_components(int x) {
  if (x < 1) throw std::invalid_argument("ramification order must be positive");
  return x % 2 == 0 ? x * x + 2 : x * x + 1;
}

int infinity_fiber_components(int y) {
  switch (y) {
    case 1: return 20;
    case 2: return 9;
    case 4:
    case 8: return 1;
    default: throw std::invalid_argument("no fibre inventory for ramification " + std::to_string(y) + " over infinity");
  }
}

int infinity_correction(int y) {
  switch (y) {
    case 1: return 19;
    case 2: return 8;
    case 4: return 0;
    default: throw UnsupportedData("c_j is only known for y in {1, 2, 4}, got " + std::to_string(y));
  }
}

int FiberInventory::terminal_singularities() const {
  int t = 0;
  for (const auto& q : quarter) t += q.terminal_points;
  return t;
}

FiberInventory fiber_inventory(const BranchData& b) {
  FiberInventory inv;
  for (int x : b.x) inv.zero.push_back({x, zero_fiber_components(x)});
  for (int y : b.y) {
    InfinityFiber f{y, 0, {}};
    switch (y) {
      case 1:
        f.multiplicities = {4, 3, 3, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
        break;
      case 2:
        f.multiplicities = {2, 1, 1, 1, 1, 1, 1, 1, 1};
        break;
      case 4:
        f.multiplicities = {1};
        break;
      default:
        break;
    }
    f.components = y == 1 || y == 2 || y == 4 || y == 8 ? infinity_fiber_components(y) : 0;
    inv.infinity.push_back(f);
  }
  for (int z : b.z) inv.quarter.push_back({z, z > 1 ? 2 : 0});
  return inv;
}

namespace {

void require_two_points_over_infinity(const BranchData& b) {
  if (b.l() != 2) {
    throw UnsupportedData("Hodge numbers are only known when g has two points over infinity (l = 2), here l = " +
                             std::to_string(b.l()));
  }
}

}  // namespace

int h11(const BranchData& b, int s) {
  require_two_points_over_infinity(b);
  int total = 12 + s + infinity_correction(b.y[0]) + infinity_correction(b.y[1]);
  for (int x : b.x) total += x % 2 == 1 ? x * x : x * x + 1;
  return total;
}

int h21(const BranchData& b, int p_g) {
  require_two_points_over_infinity(b);
  for (int y : b.y) infinity_correction(y);
  int m_odd = static_cast<int>(std::count_if(b.z.begin(), b.z.end(), [](int z) { return z % 2 == 1; }));
  if ((m_odd - b.n) % 2 != 0) throw UnsupportedData("m_odd - n is odd");
  int value = b.k() + (m_odd - b.n) / 2 + p_g;
  if (b.m() == b.n && cy_condition(b) && value != b.r + p_g) {
    throw std::logic_error("unramified case disagrees with r + p_g");
  }
  return value;
}

ReferenceConstants reference_constants() { return {}; }

namespace {

Outcome outcome_of(const hurwitz::HurwitzCover& g) {
  Outcome o;
  o.tuple = g;
  o.tuple_count = 1;
  for (const auto& c : hurwitz::c2_components()) {
    for (auto& r : hurwitz::pullback(c, g)) {
      o.genera.push_back(r.genus);
      o.p_g += r.genus;
      o.components.push_back(std::move(r));
    }
  }
  o.s = static_cast<int>(o.components.size());
  std::sort(o.genera.begin(), o.genera.end());
  return o;
}

void fill_hodge(CYReport& rep) {
  if (!rep.cy) return;
  for (auto& o : rep.outcomes) {
    try {
      o.h11 = h11(rep.data, o.s);
      o.h21 = h21(rep.data, o.p_g);
      o.euler = 2 * (*o.h11 - *o.h21);
    } catch (const UnsupportedData& e) {
      rep.unsupported = e.what();
    }
  }
  if (rep.outcomes.empty() && rep.data.l() != 2) {
    rep.unsupported = "Hodge numbers are only known when g has two points over infinity (l = 2), here l = " +
                      std::to_string(rep.data.l());
  }
}

CYReport base_report(const BranchData& b) {
  CYReport rep;
  rep.data = hurwitz::canonical(b);
  rep.cy = cy_condition(rep.data);
  rep.smooth_by_criterion = smoothness(rep.data);
  rep.inventory = fiber_inventory(rep.data);
  return rep;
}

}  // namespace

CYReport analyze(const BranchData& b, const SearchLimits& limits) {
  auto v = hurwitz::validate(b);
  if (!v.empty()) throw std::invalid_argument("inconsistent branch data: " + v.front());
  CYReport rep = base_report(b);
  auto found = hurwitz::search_tuples(rep.data, limits.max_tuples, limits.budget);
  rep.search_truncated = found.truncated;
  std::map<std::pair<int, int>, std::size_t> index;
  for (const auto& g : found.covers) {
    Outcome o = outcome_of(g);
    auto key = std::make_pair(o.s, o.p_g);
    auto it = index.find(key);
    if (it == index.end()) {
      index[key] = rep.outcomes.size();
      rep.outcomes.push_back(std::move(o));
    } else {
      ++rep.outcomes[it->second].tuple_count;
    }
  }
  std::sort(rep.outcomes.begin(), rep.outcomes.end(),
            [](const Outcome& a, const Outcome& c) { return std::tie(a.s, a.p_g) < std::tie(c.s, c.p_g); });
  rep.ambiguous = rep.outcomes.size() > 1;
  fill_hodge(rep);
  return rep;
}

CYReport analyze(const hurwitz::HurwitzCover& g) {
  auto v = hurwitz::validate(g);
  if (!v.empty()) throw std::invalid_argument("invalid cover: " + v.front());
  CYReport rep = base_report(hurwitz::branch_data(g));
  rep.explicit_tuple = true;
  rep.outcomes.push_back(outcome_of(g));
  fill_hodge(rep);
  return rep;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<BranchData> enumerate_cy(int max_degree) {
  std::vector<BranchData> out;
  for (int n = 1; n <= max_degree; ++n) {
    auto parts = partitions(n);
    std::vector<std::vector<int>> ys;
    for (const auto& y : parts) {
      if ((y.size() == 2 && y[0] <= 4 && y[0] != 3 && y[1] != 3) || (y.size() == 1 && y[0] == 8)) ys.push_back(y);
    }
    for (const auto& x : parts) {
      for (const auto& y : ys) {
        for (const auto& z : parts) {
          int r = static_cast<int>(x.size() + y.size() + z.size()) - n - 2;
          if (r < 0) continue;
          BranchData b{n, x, y, z, r};
          if (cy_condition(b)) out.push_back(b);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BranchData& a, const BranchData& b) {
    return std::tie(a.n, a.x, a.y, a.z) < std::tie(b.n, b.x, b.y, b.z);
  });
  return out;
}

}  // namespace kummer::hodge
