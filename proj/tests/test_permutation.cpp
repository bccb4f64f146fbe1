#include <gtest/gtest.h>

#include "kummer/permutation.hpp"

using namespace kummer;

TEST(Permutation, ParseForms) {
  auto a = Permutation::parse("(1 5 2 4)(3 6)", 6);
  EXPECT_EQ(a, Permutation::parse("(1524)(36)", 6));
  EXPECT_EQ(a, Permutation::parse("  (1, 5, 2, 4) (3 6) ", 6));
  EXPECT_EQ(a.to_string(), "(1524)(36)");
  EXPECT_TRUE(Permutation::parse("()", 4).is_identity());
  EXPECT_TRUE(Permutation::parse("id", 4).is_identity());
  EXPECT_EQ(Permutation::parse("(1 10)", 10).to_string(), "(1 10)");
}

TEST(Permutation, ParseErrors) {
  EXPECT_THROW(Permutation::parse("(1 2", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1 4)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1 2)(2 3)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("1 2", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1x)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::invalid_argument);
}

TEST(Permutation, RightToLeft) {
  auto a = Permutation::parse("(12)", 3), b = Permutation::parse("(23)", 3);
  // (a*b)(i) = a(b(i)): 2 -> 3 -> 3
  EXPECT_EQ((a * b)(2), 3);
  EXPECT_EQ((a * b).to_string(), "(123)");
}

TEST(Permutation, CycleData) {
  auto a = Permutation::parse("(1524)(36)", 7);
  EXPECT_EQ(a.cycle_type(), (std::vector<int>{4, 2, 1}));
  EXPECT_EQ(a.order(), 4u);
  EXPECT_EQ(a.sign(), 1);
  EXPECT_EQ(Permutation::parse("(12)", 6).sign(), -1);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(partition_to_string(Permutation::parse("(12)", 6).cycle_type()), "[2,1,1,1,1]");
}

TEST(Permutation, TableTwoProduct) {
  auto z = Permutation::parse("(14)(25)(36)", 6);
  auto inf = Permutation::parse("(1524)(36)", 6);
  auto q = Permutation::parse("(12)", 6);
  EXPECT_TRUE((z * inf * q).is_identity());
}

TEST(Permutation, Orbits) {
  std::vector<Permutation> gens{Permutation::parse("(14)(25)(36)", 6), Permutation::parse("(12)", 6),
                                Permutation::parse("(1524)(36)", 6)};
  auto o = orbits(gens, 6);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0], (std::vector<int>{1, 2, 4, 5}));
  EXPECT_EQ(o[1], (std::vector<int>{3, 6}));
  EXPECT_FALSE(is_transitive(gens, 6));
  EXPECT_EQ(group_order(gens, 6, 1000), 8u);
  EXPECT_THROW(group_order({Permutation::parse("(123456)", 6), Permutation::parse("(12)", 6)}, 6, 100),
               std::length_error);
}

TEST(Permutation, Conjugate) {
  auto p = Permutation::parse("(12)", 4), r = Permutation::parse("(1234)", 4);
  EXPECT_EQ(conjugate(p, r), Permutation::parse("(23)", 4));
}
