#include "ccomp/rng.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace ccomp {
namespace {

TEST(Rng, EngineIsStandardMersenneTwister64) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the
  // C++ standard.
  Rng rng(5489u);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.Next();
  EXPECT_EQ(v, 9981545732273789042ull);
}

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  Rng a = Rng::ForStream(42, "split");
  Rng b = Rng::ForStream(42, "split");
  Rng c = Rng::ForStream(42, "variants/x");
  Rng d = Rng::ForStream(43, "split");
  std::uint64_t va = a.Next();
  EXPECT_EQ(va, b.Next());
  EXPECT_NE(va, c.Next());
  EXPECT_NE(va, d.Next());
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng rng(1);
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 7000; ++i) {
    std::uint64_t v = rng.Below(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
  }
  EXPECT_EQ(seen.size(), 7u);
  for (const auto& [v, n] : seen) EXPECT_GT(n, 800) << v;
}

TEST(Rng, ShuffleIsAPermutation) {
  Rng rng(9);
  std::vector<int> items(50);
  for (int i = 0; i < 50; ++i) items[i] = i;
  std::vector<int> shuffled = items;
  rng.Shuffle(shuffled);
  EXPECT_NE(shuffled, items);
  std::sort(shuffled.begin(), shuffled.end());
  EXPECT_EQ(shuffled, items);
}

TEST(Rng, SampleWithoutReplacementIsDistinct) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> s = rng.SampleWithoutReplacement(1, 11, 5);
    ASSERT_EQ(s.size(), 5u);
    std::set<int> distinct(s.begin(), s.end());
    EXPECT_EQ(distinct.size(), 5u);
    for (int v : s) {
      EXPECT_GE(v, 1);
      EXPECT_LE(v, 11);
    }
  }
  EXPECT_EQ(rng.SampleWithoutReplacement(1, 3, 3).size(), 3u);
}

}  // namespace
}  // namespace ccomp
