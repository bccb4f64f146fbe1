#include "kummer/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kummer::hurwitz {

std::string Mark::to_string() const {
  switch (kind) {
    case MarkKind::quarter256: return "1/256";
    case MarkKind::infinity: return "inf";
    case MarkKind::zero: return "0";
    case MarkKind::extra: return "extra" + std::to_string(index);
  }
  return "?";
}

Mark parse_mark(const std::string& text) {
  if (text == "quarter256" || text == "1/256") return {MarkKind::quarter256, 0};
  if (text == "infinity" || text == "inf") return {MarkKind::infinity, 0};
  if (text == "zero" || text == "0") return {MarkKind::zero, 0};
  if (text.rfind("extra", 0) == 0) {
    std::string rest = text.substr(5);
    if (!rest.empty() && rest[0] == ':') rest = rest.substr(1);
    if (rest.empty()) return {MarkKind::extra, 0};
    if (rest.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad extra mark \"" + text + "\"");
    }
    return {MarkKind::extra, std::stoi(rest)};
  }
  throw std::invalid_argument("unknown mark \"" + text + "\"");
}

Permutation HurwitzCover::at(MarkKind kind) const {
  for (std::size_t i = 0; i < marks.size() && i < tuple.size(); ++i) {
    if (marks[i].kind == kind) return tuple[i];
  }
  return Permutation(degree);
}

namespace {

int ram(const std::vector<int>& parts) {
  int s = 0;
  for (int p : parts) s += p - 1;
  return s;
}

int ram(const Permutation& p) {
  return static_cast<int>(p.degree()) - static_cast<int>(p.cycle_type().size());
}

std::string parts_string(const std::vector<int>& v) { return partition_to_string(v); }

bool check_partition(const std::vector<int>& p, int n, const char* name, std::vector<std::string>& out) {
  if (p.empty()) {
    out.push_back(std::string(name) + " is empty");
    return false;
  }
  int sum = 0;
  for (int v : p) {
    if (v < 1) {
      out.push_back(std::string(name) + " has a non-positive part");
      return false;
    }
    sum += v;
  }
  if (sum != n) {
    out.push_back(std::string(name) + " sums to " + std::to_string(sum) + ", expected n = " + std::to_string(n));
    return false;
  }
  return true;
}

int mark_rank(MarkKind k) { return static_cast<int>(k); }

// Well-formedness and the product relation, without transitivity.
std::vector<std::string> check_tuple(const HurwitzCover& c) {
  std::vector<std::string> out;
  if (c.degree == 0) out.push_back("degree must be positive");
  if (c.marks.size() != c.tuple.size()) {
    out.push_back("marks and permutations differ in length (" + std::to_string(c.marks.size()) + " vs " +
                  std::to_string(c.tuple.size()) + ")");
    return out;
  }
  for (std::size_t i = 0; i < c.tuple.size(); ++i) {
    if (c.tuple[i].degree() != c.degree) {
      out.push_back("permutation " + std::to_string(i + 1) + " has degree " + std::to_string(c.tuple[i].degree()));
    }
  }
  for (std::size_t i = 1; i < c.marks.size(); ++i) {
    int a = mark_rank(c.marks[i - 1].kind), b = mark_rank(c.marks[i].kind);
    if (a > b || (a == b && c.marks[i].kind != MarkKind::extra)) {
      out.push_back("marks must be ordered 1/256, inf, 0, extras with each special mark at most once");
      break;
    }
  }
  if (!out.empty()) return out;
  Permutation prod(c.degree);
  for (const auto& p : c.tuple) prod = p * prod;
  if (!prod.is_identity()) out.push_back("product of the tuple is " + prod.to_string() + ", not the identity");
  return out;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::size_t class_size(std::size_t n, const std::vector<int>& type) {
  std::size_t denom = 1;
  std::map<int, int> mult;
  for (int v : type) ++mult[v];
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) denom *= static_cast<std::size_t>(len);
    denom *= factorial(static_cast<std::size_t>(m));
  }
  return factorial(n) / denom;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

int BranchData::ramification() const { return ram(x) + ram(y) + ram(z) + r; }

std::string BranchData::to_string() const {
  return "(" + std::to_string(k()) + "," + std::to_string(l()) + "," + std::to_string(m()) + "," + std::to_string(n) +
         "," + std::to_string(r) + ") x=" + parts_string(x) + " y=" + parts_string(y) + " z=" + parts_string(z);
}

std::vector<std::string> validate(const BranchData& b) {
  std::vector<std::string> out;
  if (b.n < 1) out.push_back("n must be positive");
  if (b.r < 0) out.push_back("r must be non-negative");
  if (!out.empty()) return out;
  check_partition(b.x, b.n, "x", out);
  check_partition(b.y, b.n, "y", out);
  check_partition(b.z, b.n, "z", out);
  return out;
}

BranchData canonical(BranchData b) {
  b.x = sorted_desc(b.x);
  b.y = sorted_desc(b.y);
  b.z = sorted_desc(b.z);
  return b;
}

std::vector<std::string> validate(const HurwitzCover& c) {
  auto out = check_tuple(c);
  if (out.empty() && !is_transitive(c.tuple, c.degree)) out.push_back("monodromy group is not transitive");
  return out;
}

bool is_connected(const HurwitzCover& c) { return check_tuple(c).empty() && is_transitive(c.tuple, c.degree); }

int genus(const HurwitzCover& c) {
  auto v = validate(c);
  if (!v.empty()) throw std::invalid_argument("genus of an invalid or disconnected cover: " + v.front());
  int total = 0;
  for (const auto& p : c.tuple) total += ram(p);
  int twice = total - 2 * static_cast<int>(c.degree) + 2;
  if (twice % 2 != 0) throw std::logic_error("odd Riemann-Hurwitz total");
  return twice / 2;
}

std::vector<ComponentReport> components(const HurwitzCover& c) {
  auto v = check_tuple(c);
  if (!v.empty()) throw std::invalid_argument("malformed cover: " + v.front());
  std::vector<ComponentReport> out;
  for (const auto& orbit : orbits(c.tuple, c.degree)) {
    ComponentReport rep;
    rep.degree = orbit.size();
    rep.points = orbit;
    int total = 0;
    for (std::size_t i = 0; i < c.tuple.size(); ++i) {
      std::vector<int> profile;
      std::set<int> seen;
      for (int p : orbit) {
        if (seen.count(p)) continue;
        int len = 0;
        for (int q = p; !seen.count(q); q = c.tuple[i](q)) {
          seen.insert(q);
          ++len;
        }
        profile.push_back(len);
        total += len - 1;
      }
      std::sort(profile.rbegin(), profile.rend());
      rep.profiles.push_back({c.marks[i], profile});
    }
    int twice = total - 2 * static_cast<int>(rep.degree) + 2;
    if (twice % 2 != 0 || twice < 0) throw std::logic_error("inconsistent Riemann-Hurwitz data on a component");
    rep.genus = twice / 2;
    out.push_back(std::move(rep));
  }
  return out;
}

BranchData branch_data(const HurwitzCover& c) {
  if (!is_connected(c)) throw std::invalid_argument("branch data of an invalid or disconnected cover");
  BranchData b;
  b.n = static_cast<int>(c.degree);
  b.x = c.at(MarkKind::zero).cycle_type();
  b.y = c.at(MarkKind::infinity).cycle_type();
  b.z = c.at(MarkKind::quarter256).cycle_type();
  for (std::size_t i = 0; i < c.marks.size(); ++i) {
    if (c.marks[i].kind != MarkKind::extra) continue;
    int e = ram(c.tuple[i]);
    if (e == 0) continue;
    if (e != 1) throw std::invalid_argument("extra branch point " + c.marks[i].to_string() + " is not simple");
    ++b.r;
  }
  return b;
}

std::vector<ComponentReport> pullback(const HurwitzCover& base_cover, const HurwitzCover& g) {
  for (const auto* c : {&base_cover, &g}) {
    auto v = check_tuple(*c);
    if (!v.empty()) throw std::invalid_argument("mark mismatch or malformed cover in pullback: " + v.front());
  }
  const std::size_t d = base_cover.degree, n = g.degree;
  auto pair_perm = [&](const Permutation& a, const Permutation& b) {
    std::vector<int> img(d * n);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t ai = static_cast<std::size_t>(a.images0()[i]);
        std::size_t bj = static_cast<std::size_t>(b.images0()[j]);
        img[i * n + j] = static_cast<int>(ai * n + bj) + 1;
      }
    }
    return Permutation::from_images(img);
  };
  HurwitzCover merged;
  merged.degree = d * n;
  for (MarkKind k : {MarkKind::quarter256, MarkKind::infinity, MarkKind::zero}) {
    merged.marks.push_back({k, 0});
    merged.tuple.push_back(pair_perm(base_cover.at(k), g.at(k)));
  }
  int extra = 0;
  for (std::size_t i = 0; i < base_cover.marks.size(); ++i) {
    if (base_cover.marks[i].kind != MarkKind::extra) continue;
    merged.marks.push_back({MarkKind::extra, ++extra});
    merged.tuple.push_back(pair_perm(base_cover.tuple[i], Permutation(n)));
  }
  for (std::size_t i = 0; i < g.marks.size(); ++i) {
    if (g.marks[i].kind != MarkKind::extra) continue;
    merged.marks.push_back({MarkKind::extra, ++extra});
    merged.tuple.push_back(pair_perm(Permutation(d), g.tuple[i]));
  }
  return components(merged);
}

HurwitzCover make_cover(std::size_t degree, const Permutation& quarter, const Permutation& infinity,
                        const Permutation& zero, const std::vector<Permutation>& extras) {
  HurwitzCover c;
  c.degree = degree;
  c.marks = {{MarkKind::quarter256, 0}, {MarkKind::infinity, 0}, {MarkKind::zero, 0}};
  c.tuple = {quarter, infinity, zero};
  int k = 0;
  for (const auto& e : extras) {
    c.marks.push_back({MarkKind::extra, ++k});
    c.tuple.push_back(e);
  }
  return c;
}

std::vector<HurwitzCover> c2_components() {
  auto p2 = [](const char* s) { return Permutation::parse(s, 2); };
  auto p4 = [](const char* s) { return Permutation::parse(s, 4); };
  HurwitzCover a = make_cover(2, p2("()"), p2("(12)"), p2("(12)"));
  HurwitzCover c = make_cover(4, p4("(13)"), p4("(1432)"), p4("(12)(34)"));
  return {a, a, c};
}

HurwitzCover canonical_form(const HurwitzCover& c) {
  if (!is_connected(c)) throw std::invalid_argument("canonical form needs a valid transitive cover");
  const std::size_t n = c.degree;
  std::vector<int> best;
  std::vector<int> best_relabel;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<int> label(n, -1);
    std::vector<std::size_t> order{start};
    label[start] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (const auto& g : c.tuple) {
        std::size_t y = static_cast<std::size_t>(g.images0()[order[head]]);
        if (label[y] < 0) {
          label[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
      }
    }
    std::vector<int> key;
    key.reserve(n * c.tuple.size());
    for (const auto& g : c.tuple) {
      for (std::size_t i = 0; i < n; ++i) {
        key.push_back(label[static_cast<std::size_t>(g.images0()[order[i]])]);
      }
    }
    if (best.empty() || key < best) {
      best = key;
      best_relabel = label;
    }
  }
  HurwitzCover out;
  out.degree = n;
  out.marks = c.marks;
  for (std::size_t t = 0; t < c.tuple.size(); ++t) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = best[t * n + i] + 1;
    out.tuple.push_back(Permutation::from_images(img));
  }
  return out;
}

bool equivalent(const HurwitzCover& a, const HurwitzCover& b) {
  if (a.degree != b.degree || a.tuple.size() != b.tuple.size()) return false;
  for (std::size_t i = 0; i < a.marks.size(); ++i) {
    if (a.marks[i].kind != b.marks[i].kind) return false;
  }
  return canonical_form(a).tuple == canonical_form(b).tuple;
}

std::vector<Permutation> conjugacy_class(std::size_t n, const std::vector<int>& cycle_type) {
  std::vector<int> type = sorted_desc(cycle_type);
  if (std::accumulate(type.begin(), type.end(), 0) != static_cast<int>(n)) {
    throw std::invalid_argument("cycle type does not sum to the degree");
  }
  std::map<int, int> remaining;
  for (int v : type) ++remaining[v];
  std::vector<Permutation> out;
  std::vector<int> img(n, 0);
  std::vector<bool> used(n, false);
  std::vector<int> cycle;

  // place the cycle containing the smallest unused point, then recurse
  std::function<void()> rec = [&] {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      std::vector<int> images(n);
      for (std::size_t i = 0; i < n; ++i) images[i] = img[i] + 1;
      out.push_back(Permutation::from_images(images));
      return;
    }
    for (auto& [len, count] : remaining) {
      if (count == 0) continue;
      --count;
      cycle.assign(1, static_cast<int>(first));
      used[first] = true;
      std::function<void()> extend = [&] {
        if (static_cast<int>(cycle.size()) == len) {
          for (std::size_t k = 0; k < cycle.size(); ++k) {
            img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
          }
          std::vector<int> saved = cycle;
          rec();
          cycle = saved;
          return;
        }
        for (std::size_t p = first + 1; p < n; ++p) {
          if (used[p]) continue;
          used[p] = true;
          cycle.push_back(static_cast<int>(p));
          extend();
          cycle.pop_back();
          used[p] = false;
        }
      };
      extend();
      used[first] = false;
      ++count;
    }
  };
  rec();
  return out;
}

Permutation class_representative(std::size_t n, const std::vector<int>& cycle_type) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  int total = 0;
  for (int len : sorted_desc(cycle_type)) {
    std::vector<int> c;
    for (int i = 0; i < len; ++i) c.push_back(next++);
    total += len;
    if (len > 1) cycles.push_back(c);
  }
  if (total != static_cast<int>(n)) throw std::invalid_argument("cycle type does not sum to the degree");
  return Permutation::from_cycles(n, cycles);
}

SearchResult search_tuples(const BranchData& input, std::size_t limit, long long budget) {
  SearchResult result;
  if (!validate(input).empty()) return result;
  BranchData b = canonical(input);
  const std::size_t n = static_cast<std::size_t>(b.n);
  const int total = b.ramification();
  if (total % 2 != 0 || total < 2 * b.n - 2) return result;

  // slots 0 = 1/256 (z), 1 = infinity (y), 2 = zero (x); product is extras o s2 o s1 o s0
  std::vector<std::vector<int>> types{b.z, b.y, b.x};
  std::vector<std::size_t> sizes;
  for (const auto& t : types) sizes.push_back(class_size(n, t));
  std::vector<int> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](int a, int c) { return sizes[a] > sizes[c] || (sizes[a] == sizes[c] && a < c); });
  const int fixed = idx[0], enumerated = idx[2], solved = idx[1];

  std::vector<Permutation> transpositions;
  for (int i = 1; i <= b.n; ++i) {
    for (int j = i + 1; j <= b.n; ++j) transpositions.push_back(Permutation::from_cycles(n, {{i, j}}));
  }

  Permutation fixed_perm = class_representative(n, types[fixed]);
  std::vector<Permutation> candidates = conjugacy_class(n, types[enumerated]);
  std::set<std::vector<Permutation>> seen;

  std::vector<std::size_t> extra_idx(static_cast<std::size_t>(b.r), 0);
  std::vector<Permutation> slots(3, Permutation(n));
  slots[fixed] = fixed_perm;
  bool stop = false;
  for (const auto& cand : candidates) {
    if (stop) break;
    slots[enumerated] = cand;
    std::fill(extra_idx.begin(), extra_idx.end(), 0);
    while (true) {
      if (++result.candidates > budget) {
        result.truncated = true;
        stop = true;
        break;
      }
      Permutation extras(n);
      std::vector<Permutation> extra_perms;
      for (std::size_t e : extra_idx) {
        extra_perms.push_back(transpositions[e]);
        extras = transpositions[e] * extras;
      }
      // extras o s2 o s1 o s0 = id, solve for the missing slot: left = everything after it, right = before
      Permutation left = extras, right(n);
      for (int s = 2; s > solved; --s) left = left * slots[s];
      for (int s = solved - 1; s >= 0; --s) right = right * slots[s];
      Permutation missing = left.inverse() * right.inverse();
      if (missing.cycle_type() == types[solved]) {
        slots[solved] = missing;
        HurwitzCover c = make_cover(n, slots[0], slots[1], slots[2], extra_perms);
        if (is_transitive(c.tuple, n)) {
          HurwitzCover canon = canonical_form(c);
          if (seen.insert(canon.tuple).second) {
            result.covers.push_back(canon);
            if (result.covers.size() >= limit) {
              result.truncated = true;
              stop = true;
              break;
            }
          }
        }
      }
      std::size_t pos = 0;
      while (pos < extra_idx.size() && ++extra_idx[pos] == transpositions.size()) extra_idx[pos++] = 0;
      if (pos == extra_idx.size()) break;
    }
  }
  std::sort(result.covers.begin(), result.covers.end(),
            [](const HurwitzCover& a, const HurwitzCover& c) { return a.tuple < c.tuple; });
  return result;
}

std::vector<Permutation> regular_representation(const std::vector<Permutation>& gens,
                                                const std::vector<Permutation>& elements) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::size_t n = gens.front().degree();
  std::set<Permutation> group{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Permutation q = g * p;
        if (group.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> list(group.begin(), group.end());
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  std::vector<Permutation> out;
  for (const auto& e : elements) {
    auto it = index.find(e);
    if (it == index.end()) throw std::invalid_argument("element outside the generated group");
    std::vector<int> img(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) img[i] = index.at(e * list[i]) + 1;
    out.push_back(Permutation::from_images(img));
  }
  return out;
}

HurwitzCover regular_d8_cover() {
  Permutation rot = Permutation::parse("(1234)", 4);
  Permutation ref = Permutation::parse("(24)", 4);
  Permutation zero = (rot * ref).inverse();
  auto reg = regular_representation({rot, ref}, {ref, rot, zero});
  return make_cover(8, reg[0], reg[1], reg[2]);
}

}  // namespace kummer::hurwitz
