#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

#include "doob/doob.hpp"
#include "helpers.hpp"

namespace doob {
namespace {

using testing::sh_set;

TEST(VertexSet, BasicMembership) {
  const DoobParams p(1, 1);
  VertexSet s(p);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.min_member(), 64U);
  s.insert(5);
  s.insert(63);
  s.insert(5);
  EXPECT_EQ(s.count(), 2U);
  EXPECT_TRUE(s.contains(63));
  EXPECT_EQ(s.min_member(), 5U);
  s.flip(5);
  EXPECT_FALSE(s.contains(5));
  s.assign(7, true);
  EXPECT_EQ(s.members(), (std::vector<VertexIndex>{7, 63}));
  EXPECT_THROW(VertexSet(p, {64}), InvalidArgument);
}

TEST(VertexSet, ComplementStaysInsideUniverse) {
  const DoobParams sh(1, 0);
  const VertexSet empty(sh);
  const auto full = empty.complement();
  EXPECT_EQ(full.count(), 16U);
  EXPECT_EQ(full, VertexSet::full(sh));
  EXPECT_EQ(full.complement(), empty);
  EXPECT_EQ(VertexSet::from_mask(sh, ~std::uint64_t{0}).count(), 16U);
}

TEST(VertexSet, SetAlgebra) {
  const auto a = sh_set({"00", "01", "02"});
  const auto b = sh_set({"02", "03"});
  EXPECT_EQ(a & b, sh_set({"02"}));
  EXPECT_EQ(a | b, sh_set({"00", "01", "02", "03"}));
  EXPECT_EQ(a ^ b, sh_set({"00", "01", "03"}));
  EXPECT_EQ(a - b, sh_set({"00", "01"}));
  EXPECT_TRUE(sh_set({"01"}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(sh_set({"33"}).intersects(a));
}

TEST(VertexSet, MismatchedGraphsThrow) {
  const VertexSet a(DoobParams(1, 0));
  const VertexSet b(DoobParams(0, 2));
  EXPECT_THROW((void)(a & b), ParamMismatch);
  EXPECT_THROW((void)a.is_subset_of(b), ParamMismatch);
  EXPECT_THROW((void)(a < b), ParamMismatch);
  EXPECT_FALSE(a == b);
}

TEST(VertexSet, OrderBySmallestDifference) {
  // The set holding the smallest element of the symmetric difference comes first.
  EXPECT_LT(sh_set({"00", "33"}), sh_set({"01", "02"}));
  EXPECT_LT(sh_set({"00", "01"}), sh_set({"00", "02"}));
  EXPECT_LT(sh_set({"00", "01"}), sh_set({"00"}));
  EXPECT_FALSE(sh_set({"00"}) < sh_set({"00"}));

  // Equal-size sets compare like their ascending member lists.
  std::vector<VertexSet> sets;
  for (std::uint64_t mask = 0; mask < 65536; mask += 97) {
    if (std::popcount(mask) == 6) sets.push_back(VertexSet::from_mask(DoobParams(1, 0), mask));
  }
  auto by_members = sets;
  std::sort(sets.begin(), sets.end());
  std::sort(by_members.begin(), by_members.end(),
            [](const VertexSet& x, const VertexSet& y) { return x.members() < y.members(); });
  EXPECT_EQ(sets, by_members);
}

TEST(VertexSet, WordsRoundTrip) {
  const DoobParams p(2, 0);
  VertexSet s(p);
  for (VertexIndex v = 0; v < 256; v += 7) s.insert(v);
  EXPECT_EQ(VertexSet::from_words(p, s.words()), s);
  const std::vector<std::uint64_t> short_words(2, 0);
  EXPECT_THROW(VertexSet::from_words(p, short_words), InvalidArgument);
}

TEST(VertexSet, HashDistinguishesSets) {
  std::unordered_set<VertexSet> seen;
  for (std::uint64_t mask = 0; mask < 4096; ++mask) seen.insert(VertexSet::from_mask(DoobParams(1, 0), mask));
  EXPECT_EQ(seen.size(), 4096U);
}

}  // namespace
}  // namespace doob
