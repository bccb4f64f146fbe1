#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kummer/permutation.hpp"

namespace kummer::hurwitz {

// Marked points of the lambda line. Extras are anonymous simple branch points, numbered per cover.
enum class MarkKind { quarter256, infinity, zero, extra };

struct Mark {
  MarkKind kind = MarkKind::extra;
  int index = 0;  // only for extras

  std::string to_string() const;
  friend bool operator==(const Mark& a, const Mark& b) { return a.kind == b.kind && a.index == b.index; }
};

Mark parse_mark(const std::string& text);  // "quarter256" | "1/256" | "infinity" | "inf" | "zero" | "0" | "extra[:k]"

// Monodromy tuple; tuple[last] o ... o tuple[1] o tuple[0] must be the identity.
struct HurwitzCover {
  std::size_t degree = 0;
  std::vector<Mark> marks;
  std::vector<Permutation> tuple;

  Permutation at(MarkKind kind) const;  // identity when the mark is absent
};

// Partitions over lambda = 0 (x), infinity (y), 1/256 (z) plus r extra simple branch points.
struct BranchData {
  int n = 0;
  std::vector<int> x;
  std::vector<int> y;
  std::vector<int> z;
  int r = 0;

  int k() const { return static_cast<int>(x.size()); }
  int l() const { return static_cast<int>(y.size()); }
  int m() const { return static_cast<int>(z.size()); }
  // total ramification sum (e - 1) including the extras
  int ramification() const;
  std::string to_string() const;  // "(k,l,m,n,r) x=[..] y=[..] z=[..]"
  friend bool operator==(const BranchData& a, const BranchData& b) {
    return a.n == b.n && a.x == b.x && a.y == b.y && a.z == b.z && a.r == b.r;
  }
};

// Empty when consistent: partitions of n, sorted descending, r >= 0.
std::vector<std::string> validate(const BranchData& b);
// Sorts the partitions in place into canonical (descending) order.
BranchData canonical(BranchData b);

struct MarkProfile {
  Mark mark;
  std::vector<int> profile;  // descending cycle type
};

struct ComponentReport {
  std::size_t degree = 0;  // over the lambda line
  std::vector<MarkProfile> profiles;
  int genus = 0;
  std::vector<int> points;  // the orbit, 1-based
};

// Structured violations; never throws. Checks sizes, marks, product identity and transitivity.
std::vector<std::string> validate(const HurwitzCover& c);
bool is_connected(const HurwitzCover& c);

// Riemann-Hurwitz over a genus-0 base. Throws std::invalid_argument for invalid or disconnected input.
int genus(const HurwitzCover& c);

// One report per orbit. Throws std::invalid_argument when the tuple is malformed.
std::vector<ComponentReport> components(const HurwitzCover& c);

// Branch data read off a connected cover. Extras must be transpositions.
BranchData branch_data(const HurwitzCover& c);

// Normalized fibre product over the lambda line: the product action on pairs, split into orbits.
// Special marks are matched by kind, extras of the two covers are distinct points.
std::vector<ComponentReport> pullback(const HurwitzCover& base_cover, const HurwitzCover& g);

// Three components: degree 2, 2 (branched over 0 and infinity) and 4 with [2,1,1] over 1/256,
// [2,2] over 0 and [4] over infinity. Marks in the order (1/256, infinity, 0).
std::vector<HurwitzCover> c2_components();

// Cover realizing data in mark order (1/256, infinity, 0, extras...) with the given tuple entries.
HurwitzCover make_cover(std::size_t degree, const Permutation& quarter, const Permutation& infinity,
                        const Permutation& zero, const std::vector<Permutation>& extras = {});

// Canonical representative under simultaneous conjugation (transitive tuples only).
HurwitzCover canonical_form(const HurwitzCover& c);
bool equivalent(const HurwitzCover& a, const HurwitzCover& b);

struct SearchResult {
  std::vector<HurwitzCover> covers;  // canonical forms, sorted
  bool truncated = false;            // stopped at the result limit or the work budget
  long long candidates = 0;          // tuples examined
};

// All transitive identity-product tuples realizing b up to simultaneous conjugation, extras being
// transpositions. Stops after `limit` results or `budget` candidates.
SearchResult search_tuples(const BranchData& b, std::size_t limit = 64, long long budget = 20000000);

// Regular representation of the group generated by the given permutations, applied to each of them.
std::vector<Permutation> regular_representation(const std::vector<Permutation>& gens,
                                                const std::vector<Permutation>& elements);

// The Galois cover with group D8: rotation of order 4 over infinity, reflections over 0 and 1/256.
HurwitzCover regular_d8_cover();

// All permutations of degree n with the given cycle type (descending, fixed points included).
std::vector<Permutation> conjugacy_class(std::size_t n, const std::vector<int>& cycle_type);
Permutation class_representative(std::size_t n, const std::vector<int>& cycle_type);

}  // namespace kummer::hurwitz
