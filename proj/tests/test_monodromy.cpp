#include <gtest/gtest.h>

#include <chrono>

#include "kummer/monodromy.hpp"

using namespace kummer;
using namespace kummer::monodromy;

namespace {

const PunctureTable& table() {
  static const PunctureTable t = puncture_table();
  return t;
}

}  // namespace

TEST(BaseRoots, SixDistinctTriplesSorted) {
  auto r = base_roots(make_rational(-257, 256), 128);
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j < i; ++j) EXPECT_GT(abs(r.roots[i - 1] - r.roots[j - 1]).to_double(), 1e-3);
  }
  for (int off : {1, 4}) {
    for (int k = off; k < off + 2; ++k) EXPECT_LE(r.normalized(k).re.to_double(), r.normalized(k + 1).re.to_double());
  }
  EXPECT_THROW(base_roots(0, 128), std::invalid_argument);
}

TEST(TrackLoop, ContractibleLoopIsIdentity) {
  LoopSpec s;
  s.center_re = make_rational(-1, 2);
  s.radius = make_rational(1, 8);
  auto r = track_loop(s, {128, 64, 1.0});
  EXPECT_TRUE(r.perm.is_identity());
  EXPECT_FALSE(r.sqrt_flipped);
}

TEST(TrackLoop, ZeroSwapsTriples) {
  const auto& t = table();
  EXPECT_EQ(t.zero.perm.cycle_type(), (std::vector<int>{2, 2, 2}));
  EXPECT_TRUE(swaps_triples(t.zero.perm));
  EXPECT_TRUE(t.zero.sqrt_flipped);
  EXPECT_EQ(t.zero.perm, Permutation::parse("(16)(25)(34)", 6));
}

TEST(TrackLoop, QuarterIsTransposition) {
  const auto& t = table();
  EXPECT_EQ(t.quarter.perm.cycle_type(), (std::vector<int>{2, 1, 1, 1, 1}));
  EXPECT_TRUE(within_triples(t.quarter.perm));
  EXPECT_EQ(t.quarter.perm, Permutation::parse("(12)", 6));
}

TEST(TrackLoop, InfinityDirectAndDerived) {
  const auto& t = table();
  EXPECT_EQ(t.infinity.perm.cycle_type(), (std::vector<int>{4, 2}));
  EXPECT_EQ(t.infinity.perm, t.infinity_from_product);
  EXPECT_TRUE(t.product_is_identity);
  EXPECT_EQ(t.infinity.perm, Permutation::parse("(1526)(34)", 6));
}

TEST(TrackLoop, ReferenceLabels) {
  const auto& t = table();
  EXPECT_EQ(to_reference_labels(t.zero.perm), Permutation::parse("(14)(25)(36)", 6));
  EXPECT_EQ(to_reference_labels(t.quarter.perm), Permutation::parse("(12)", 6));
  EXPECT_EQ(to_reference_labels(t.infinity.perm), Permutation::parse("(1524)(36)", 6));
}

TEST(TrackLoop, GeneratedGroup) {
  const auto& t = table();
  std::vector<Permutation> gens{t.zero.perm, t.quarter.perm, t.infinity.perm};
  EXPECT_EQ(group_order(gens, 6, 10000), 8u);
  EXPECT_FALSE(is_transitive(gens, 6));
}

TEST(TrackLoop, Closure) {
  const auto& t = table();
  for (const auto* r : {&t.zero, &t.quarter, &t.infinity}) {
    EXPECT_LT(r->closure_error, 1e-32);
    EXPECT_GT(r->min_separation, 0);
  }
}

TEST(TrackLoop, StepStability) {
  const auto& t = table();
  for (double scale : {0.5, 0.25}) {
    auto h = puncture_table({128, 256, scale});
    EXPECT_EQ(h.zero.perm, t.zero.perm) << scale;
    EXPECT_EQ(h.quarter.perm, t.quarter.perm) << scale;
    EXPECT_EQ(h.infinity.perm, t.infinity.perm) << scale;
  }
}

TEST(TrackLoop, PrecisionIndependent) {
  const auto& t = table();
  auto h = puncture_table({96, 256, 1.0});
  EXPECT_EQ(h.zero.perm, t.zero.perm);
  EXPECT_EQ(h.quarter.perm, t.quarter.perm);
  EXPECT_EQ(h.infinity.perm, t.infinity.perm);
}

TEST(TrackLoop, BadOptions) {
  EXPECT_THROW(track_loop(loop_around(Puncture::zero), {32, 256, 1.0}), std::invalid_argument);
  EXPECT_THROW(track_loop(loop_around(Puncture::zero), {128, 0, 1.0}), std::invalid_argument);
}

TEST(TrackLoop, LoopThroughPunctureFails) {
  LoopSpec s = loop_around(Puncture::zero);
  s.center_re = make_rational(1, 512);  // circle passes through lambda = 0
  EXPECT_THROW(track_loop(s, {128, 64, 1.0}), std::runtime_error);
}

TEST(DeckParity, Examples) {
  EXPECT_EQ(deck_parity(Permutation::parse("(45)", 6)).parity, DeckParity::swaps);
  EXPECT_EQ(deck_parity(Permutation(6)).parity, DeckParity::preserves);
  auto r = deck_parity(Permutation::parse("(14)(25)(36)", 6));
  EXPECT_EQ(r.parity, DeckParity::not_in_H);
  EXPECT_TRUE(r.exchanges_blocks);
  auto a = deck_parity(Permutation::parse("(1524)(36)", 6));
  EXPECT_EQ(a.parity, DeckParity::not_in_H);
  EXPECT_TRUE(a.exchanges_blocks);
  EXPECT_EQ(a.sign, 1);
}

TEST(DeckParity, ConjugacyRobustCycleTypes) {
  const auto& t = table();
  auto r = Permutation::parse("(13)(56)", 6);
  EXPECT_EQ(conjugate(t.infinity.perm, r).cycle_type(), t.infinity.perm.cycle_type());
}
