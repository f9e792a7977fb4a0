#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "workbench/counting_order.hpp"

namespace workbench {
namespace {

using testing::strings_up_to;

const Alphabet kAB("ab");

bool strictly_descending(const ComparableOrder<NatPair>& order, const std::vector<NatPair>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (order.compare(chain[i - 1], chain[i]) != std::partial_ordering::greater) return false;
  }
  return true;
}

TEST(OrderFromBijection, Examples) {
  const auto order = order_from_bijection(unrank_bijection(kAB));
  EXPECT_EQ(order.compare("ba", "ab"), std::partial_ordering::greater);
  EXPECT_EQ(order.compare("b", "aa"), std::partial_ordering::less);
  for (const auto& w : strings_up_to(kAB, 4)) {
    EXPECT_EQ(order.compare(w, w), std::partial_ordering::equivalent);
  }
  EXPECT_TRUE(order.total);

  const auto even = order_from_bijection(strided_unrank_bijection(kAB, 2));
  EXPECT_EQ(even.compare("ab", "b"), std::partial_ordering::greater);
  try {
    even.compare("a", "b");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inverse_failure);
  }
}

TEST(DeleteMin, FromBijection) {
  auto source = delete_min_from_bijection(unrank_bijection(kAB));
  EXPECT_EQ(source.call_count(), 0u);
  EXPECT_EQ(source.delete_min(), "");
  EXPECT_EQ(source.delete_min(), "a");
  EXPECT_EQ(source.delete_min(), "b");
  EXPECT_EQ(source.call_count(), 3u);

  auto squares = delete_min_from_bijection(square_unrank_bijection(kAB));
  for (Index n = 0; n < 20; ++n) EXPECT_EQ(squares.delete_min(), unrank(n * n, kAB));
}

TEST(DeleteMin, ExplicitSetIsSorted) {
  const auto order = order_from_bijection(unrank_bijection(kAB));
  auto source = delete_min_from_set<std::string>({"bb", "a", "aab", "", "ba"}, order);
  for (const char* expected : {"", "a", "ba", "bb", "aab"}) EXPECT_EQ(source.delete_min(), expected);
  try {
    source.delete_min();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::source_exhausted);
  }
  EXPECT_EQ(source.call_count(), 5u);
}

TEST(DeleteMin, FiniteSourceBijection) {
  const auto order = order_from_bijection(unrank_bijection(kAB));
  auto g = bijection_from_delete_min(delete_min_from_set<std::string>({"ab", "b", "a"}, order));
  EXPECT_EQ(g.forward(0), "a");
  EXPECT_EQ(g.forward(2), "ab");
  try {
    g.forward(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::source_exhausted);
  }
  EXPECT_EQ(g.inverse("b", 10), 1u);
  EXPECT_EQ(g.inverse("bb", 10), std::nullopt);
}

TEST(RoundTrip, BijectionDeleteMinBijection) {
  for (auto f : {unrank_bijection(kAB), strided_unrank_bijection(kAB, 3)}) {
    const auto g = bijection_from_delete_min(delete_min_from_bijection(f));
    for (Index i = 0; i < 1000; ++i) ASSERT_EQ(g.forward(i), f.forward(i)) << i;
    for (Index i = 0; i < 1000; ++i) ASSERT_EQ(g.inverse(f.forward(i), 0), i);
  }
}

TEST(RoundTrip, DeleteMinBijectionDeleteMin) {
  auto original = delete_min_from_bijection(unrank_bijection(kAB));
  auto reference = delete_min_from_bijection(unrank_bijection(kAB));
  auto again = delete_min_from_bijection(bijection_from_delete_min(std::move(original)));
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(again.delete_min(), reference.delete_min()) << i;
  EXPECT_EQ(again.call_count(), 1000u);
}

TEST(ChainSearch, LexicographicPairsAreNotGapFinite) {
  const auto order = lexicographic_nat_pairs();
  const auto result = chain_search(order, NatPair{1, 0}, NatPair{0, 0}, 10'000);
  EXPECT_TRUE(result.budget_exceeded);
  EXPECT_GT(result.chain.size(), 10'000u);
  EXPECT_TRUE(strictly_descending(order, result.chain));
  EXPECT_EQ(result.chain.front(), (NatPair{1, 0}));
  EXPECT_EQ(result.chain[1], (NatPair{0, 10'000}));
  EXPECT_EQ(result.chain.back(), (NatPair{0, 0}));
}

TEST(ChainSearch, LexicographicBudgetScales) {
  const auto order = lexicographic_nat_pairs();
  for (Index budget : {10u, 100u, 1000u}) {
    const auto result = chain_search(order, NatPair{1, 0}, NatPair{0, 0}, budget);
    EXPECT_TRUE(result.budget_exceeded);
    EXPECT_GT(result.chain.size(), budget);
    EXPECT_TRUE(strictly_descending(order, result.chain));
  }
  // within one first coordinate the gap is finite
  const auto inside = chain_search(order, NatPair{0, 5}, NatPair{0, 0}, 100);
  EXPECT_FALSE(inside.budget_exceeded);
  EXPECT_EQ(inside.chain.size(), 6u);
}

TEST(ChainSearch, UnrankOrder) {
  const auto order = order_from_bijection(unrank_bijection(kAB));
  const auto result = chain_search(order, std::string("bb"), std::string(""), 10'000);
  EXPECT_FALSE(result.budget_exceeded);
  EXPECT_TRUE(result.reached_target);
  EXPECT_EQ(result.chain, (std::vector<std::string>{"bb", "ba", "ab", "aa", "b", "a", ""}));

  const auto same = chain_search(order, std::string("ab"), std::string("ab"), 10);
  EXPECT_EQ(same.chain.size(), 1u);
  EXPECT_TRUE(same.reached_target);
}

TEST(ChainSearch, GapLengthIsRankDifference) {
  const auto order = order_from_bijection(unrank_bijection(kAB));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Index> pick(0, 2'000);
  for (int trial = 0; trial < 200; ++trial) {
    Index i = pick(rng), j = pick(rng);
    if (i < j) std::swap(i, j);
    const auto result = chain_search(order, unrank(i, kAB), unrank(j, kAB), 10'000);
    ASSERT_TRUE(result.reached_target);
    ASSERT_EQ(result.chain.size(), i - j + 1);
  }
}

TEST(ChainSearch, EndpointErrors) {
  const auto subsets = subset_order();
  try {
    chain_search(subsets, std::uint64_t{0b01}, std::uint64_t{0b10}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::incomparable_endpoints);
  }
  const auto order = order_from_bijection(unrank_bijection(kAB));
  EXPECT_THROW(chain_search(order, std::string(""), std::string("a"), 10), Error);

  const auto down = chain_search(subsets, std::uint64_t{0b1011}, std::uint64_t{0b0001}, 10);
  EXPECT_TRUE(down.reached_target);
  EXPECT_EQ(down.chain.size(), 3u);
}

TEST(SubsetOrder, NotTotal) {
  const auto order = subset_order();
  EXPECT_FALSE(order.total);
  EXPECT_EQ(order.compare(0b01, 0b10), std::partial_ordering::unordered);
  EXPECT_EQ(order.compare(0b11, 0b10), std::partial_ordering::greater);
}

// Poset axioms, totality and the counting-order law on the unrank order,
// checked against rank arithmetic.
TEST(Property, UnrankOrderIsACountingOrder) {
  const auto order = order_from_bijection(unrank_bijection(kAB));
  const auto all = strings_up_to(kAB, 7);
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& x = all[pick(rng)];
    const auto& y = all[pick(rng)];
    const auto& z = all[pick(rng)];
    const auto xy = order.compare(x, y);
    ASSERT_NE(xy, std::partial_ordering::unordered);
    ASSERT_EQ(xy == std::partial_ordering::equivalent, x == y);
    ASSERT_EQ(order.compare(y, x), 0 <=> xy);
    if (xy != std::partial_ordering::less && order.compare(y, z) != std::partial_ordering::less) {
      ASSERT_NE(order.compare(x, z), std::partial_ordering::less);
    }
    // elements strictly between x and y: exactly |rank x - rank y| - 1
    std::size_t between = 0;
    for (const auto& w : all) {
      if (order.compare(w, x) == order.compare(y, w) && order.compare(w, x) != 0) ++between;
    }
    const auto gap = rank(x, kAB) > rank(y, kAB) ? rank(x, kAB) - rank(y, kAB) : rank(y, kAB) - rank(x, kAB);
    ASSERT_EQ(Rank(between), gap == 0 ? Rank(0) : gap - 1);
  }
  // every nonempty subset has a minimum: ε is below all
  for (const auto& w : all) ASSERT_NE(order.compare(w, ""), std::partial_ordering::less);
}

}  // namespace
}  // namespace workbench
