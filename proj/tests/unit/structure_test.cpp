#include <gtest/gtest.h>

#include <algorithm>

#include "doob/doob.hpp"
#include "helpers.hpp"

namespace doob {
namespace {

using testing::sh_set;
using testing::sh_where;

/// chi(x, y) = chi_a(x) xor chi_b(y), x over the first coordinates.
VertexSet xor_sum(const VertexSet& a, const VertexSet& b, const DoobParams& p) {
  const auto width = b.params().vertex_count();
  VertexSet out(p);
  for (VertexIndex v = 0; v < p.vertex_count(); ++v) {
    if (a.contains(static_cast<VertexIndex>(v / width)) != b.contains(static_cast<VertexIndex>(v % width))) {
      out.insert(v);
    }
  }
  return out;
}

std::vector<VertexSet> sh_two_mds() {
  std::vector<VertexSet> out;
  for (const auto mask : sh_catalog().two_mds) out.push_back(VertexSet::from_mask(DoobParams(1, 0), mask));
  return out;
}

TEST(InteractionGraph, SeparableFunctionHasNoEdges) {
  const DoobParams p(1, 1);
  VertexSet s(p);
  for (VertexIndex v = 0; v < 64; ++v) {
    const int a = p.digit(v, 0) / 4;
    const int c = p.digit(v, 1) / 2;
    if ((a + c) % 2 == 1) s.insert(v);
  }
  const auto g = interaction_graph(s);
  EXPECT_EQ(g.order, 2);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.components().size(), 2U);
}

TEST(InteractionGraph, ConnectedCodeOfK4Square) {
  int connected = 0;
  for (const auto& s : collect_codes({DoobParams(0, 2), Target::two_mds, SearchMode::all, 1})) {
    if (components(s).size() != 1) continue;
    ++connected;
    const auto g = interaction_graph(s);
    ASSERT_EQ(g.edges.size(), 1U);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 0));
  }
  EXPECT_EQ(connected, 72);
}

TEST(InteractionGraph, SingleCoordinate) {
  for (const auto& s : sh_two_mds()) {
    const auto g = interaction_graph(s);
    EXPECT_EQ(g.order, 1);
    EXPECT_TRUE(g.edges.empty());
  }
}

TEST(Decomposition, NormalFormOfASum) {
  const DoobParams p(1, 1);
  const auto rows13 = sh_where([](int a, int) { return a % 2 == 1; });
  const auto pair = testing::set_of(DoobParams(0, 1), {"10", "11"});
  const TwoMdsCode m(xor_sum(rows13, pair, p));
  const auto d = canonical_decomposition(m);
  ASSERT_EQ(d.k(), 2U);
  EXPECT_FALSE(d.sigma);
  EXPECT_TRUE(d.decomposable());
  EXPECT_EQ(d.blocks[0].coords, std::vector<int>{0});
  EXPECT_EQ(d.blocks[0].code, rows13);
  EXPECT_EQ(d.blocks[1].code, pair);
  EXPECT_EQ(d.reconstruct(), m.set());

  const auto dc = canonical_decomposition(complement_code(m));
  EXPECT_TRUE(dc.sigma);
  ASSERT_EQ(dc.k(), 2U);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(dc.blocks[i].coords, d.blocks[i].coords);
    EXPECT_EQ(dc.blocks[i].code, d.blocks[i].code);
  }
}

TEST(Decomposition, BlocksAvoidTheZeroTuple) {
  for (const auto& s : collect_codes({DoobParams(1, 1), Target::two_mds, SearchMode::all, 1})) {
    const auto d = canonical_decomposition(TwoMdsCode(s));
    EXPECT_EQ(d.reconstruct(), s);
    for (const auto& b : d.blocks) {
      EXPECT_FALSE(b.code.contains(0));
      EXPECT_TRUE(is_two_mds(b.code));
    }
  }
}

TEST(Decomposition, ConnectedShrikhandeCodeIsOneBlock) {
  for (const auto& s : sh_two_mds()) {
    const auto d = canonical_decomposition(TwoMdsCode(s));
    EXPECT_EQ(d.k(), 1U);
    EXPECT_EQ(d.sigma, s.contains(0));
  }
}

TEST(Decomposition, InvariantUnderCoordinateRelabelling) {
  // Swapping the two coordinates of D(2,0) swaps the blocks and keeps sigma.
  const DoobParams p(2, 0);
  const auto gens = aut_generators(p);
  ASSERT_FALSE(gens.swaps.empty());
  const auto& swap = gens.swaps.front().image;
  const auto linear = enumerate_linear(p);
  for (const auto& m : linear) {
    const auto d = canonical_decomposition(m);
    const auto e = canonical_decomposition(TwoMdsCode(apply(swap, m.set())));
    ASSERT_EQ(d.k(), e.k());
    EXPECT_EQ(d.sigma, e.sigma);
    EXPECT_EQ(d.blocks[0].code, e.blocks[1].code);
    EXPECT_EQ(d.blocks[1].code, e.blocks[0].code);
  }
}

TEST(Decomposition, ComponentCountOfSums) {
  const auto sh = sh_two_mds();
  for (const auto& a : sh) {
    const auto na = components(a).size();
    for (const auto& b : sh) {
      const auto s = xor_sum(a, b, DoobParams(2, 0));
      ASSERT_TRUE(is_two_mds(s));
      const auto nb = components(b).size();
      EXPECT_EQ(components(s).size(), 2 * na * nb);
      EXPECT_EQ(components(s.complement()).size(), 2 * na * nb);
    }
    const auto pair = testing::set_of(DoobParams(0, 1), {"00", "01"});
    EXPECT_EQ(components(xor_sum(a, pair, DoobParams(1, 1))).size(), 2 * na);
  }
}

TEST(Linear, Examples) {
  EXPECT_TRUE(is_linear(TwoMdsCode(sh_where([](int a, int) { return a % 2 == 0; }))));
  for (const auto& s : sh_two_mds()) {
    if (components(s).size() == 1) {
      EXPECT_FALSE(is_linear(TwoMdsCode(s)));
    }
  }
  const auto rows = sh_where([](int a, int) { return a % 2 == 0; });
  const auto pair = testing::set_of(DoobParams(0, 1), {"00", "01"});
  EXPECT_TRUE(is_linear(TwoMdsCode(xor_sum(rows, pair, DoobParams(1, 1)))));
}

TEST(Linear, Counts) {
  EXPECT_EQ(enumerate_linear(DoobParams(1, 0)).size(), 6U);
  EXPECT_EQ(enumerate_linear(DoobParams(1, 1)).size(), 18U);
  EXPECT_EQ(enumerate_linear(DoobParams(2, 0)).size(), 18U);
  EXPECT_EQ(enumerate_linear(DoobParams(0, 3)).size(), 54U);
}

TEST(Linear, AscendingDistinctWithPredictedComponents) {
  for (const auto p : {DoobParams(1, 0), DoobParams(0, 2), DoobParams(1, 1), DoobParams(2, 0)}) {
    const auto linear = enumerate_linear(p);
    for (std::size_t i = 0; i < linear.size(); ++i) {
      EXPECT_TRUE(is_linear(linear[i]));
      if (i > 0) {
        EXPECT_LT(linear[i - 1].set(), linear[i].set());
      }
      const auto expected = std::uint64_t{1} << (p.weight() - 1);
      EXPECT_EQ(components(linear[i].set()).size(), expected);
    }
  }
}

TEST(Semilinear, ShrikhandeWitness) {
  const auto w = is_semilinear(MdsCode(sh_set({"00", "02", "20", "22"})));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->set(), sh_where([](int a, int) { return a % 2 == 0; }));
  const auto w2 = is_semilinear(MdsCode(sh_set({"00", "02", "21", "23"})));
  ASSERT_TRUE(w2.has_value());
  EXPECT_TRUE(sh_set({"00", "02", "21", "23"}).is_subset_of(w2->set()));
}

TEST(Reducible, WeightCondition) {
  EXPECT_TRUE(admissible_bipartitions(DoobParams(1, 0)).empty());
  EXPECT_TRUE(admissible_bipartitions(DoobParams(0, 2)).empty());
  EXPECT_TRUE(admissible_bipartitions(DoobParams(1, 1)).empty());
  EXPECT_EQ(admissible_bipartitions(DoobParams(2, 0)).size(), 1U);
  EXPECT_EQ(admissible_bipartitions(DoobParams(0, 4)).size(), 3U);
  const auto split = admissible_bipartitions(DoobParams(1, 2));
  // Only the Shrikhande coordinate alone balances the two K4 coordinates.
  ASSERT_EQ(split.size(), 1U);
  EXPECT_EQ(split[0].first, std::vector<int>{0});
  EXPECT_EQ(split[0].second, (std::vector<int>{1, 2}));

  EXPECT_FALSE(is_reducible(MdsCode(sh_set({"00", "02", "20", "22"}))).has_value());
  const MdsCode diag(testing::set_of(DoobParams(0, 2), {"00.00", "01.01", "10.10", "11.11"}));
  EXPECT_FALSE(is_reducible(diag).has_value());
}

TEST(Reducible, GraphOfAColoringSplitsButIsNotAdmissible) {
  // Every fiber trace of the graph is a translate of {a, b both even}.
  std::vector<std::uint8_t> colors(16);
  for (int v = 0; v < 16; ++v) colors[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(2 * ((v / 4) % 2) + v % 2);
  const LatinColoring f(DoobParams(1, 0), colors);
  const auto c = graph_of_coloring(f);
  const auto along = reducible_along(c, {0});
  ASSERT_TRUE(along.has_value());
  EXPECT_EQ(along->reconstruct(c.params()), c.set());
  EXPECT_FALSE(is_reducible(c).has_value());
  const auto cls = classify(c);
  EXPECT_TRUE(cls.semilinear());
  EXPECT_FALSE(cls.reducible());
}

TEST(Classify, BothFlags) {
  // {(x, x') : a = a' and b = b' mod 2}
  const DoobParams p(2, 0);
  VertexSet s(p);
  for (VertexIndex v = 0; v < 256; ++v) {
    const int x = p.digit(v, 0);
    const int y = p.digit(v, 1);
    if ((x / 4) % 2 == (y / 4) % 2 && (x % 4) % 2 == (y % 4) % 2) s.insert(v);
  }
  const MdsCode c(s);
  const auto cls = classify(c);
  ASSERT_TRUE(cls.semilinear());
  ASSERT_TRUE(cls.reducible());
  EXPECT_TRUE(c.set().is_subset_of(cls.linear_witness->set()));
  EXPECT_EQ(cls.reducible_witness->reconstruct(p), c.set());
  EXPECT_EQ(cls.reducible_witness->coords_a, std::vector<int>{0});
  EXPECT_EQ(all_reducible_witnesses(c).size(), 1U);
}

TEST(Classify, ShrikhandeCodesAreSemilinearOnly) {
  for (const auto mask : sh_catalog().mds) {
    const auto cls = classify(MdsCode(VertexSet::from_mask(DoobParams(1, 0), mask)));
    EXPECT_TRUE(cls.semilinear());
    EXPECT_FALSE(cls.reducible());
  }
}

TEST(Classify, WitnessesReverify) {
  const auto codes = collect_codes({DoobParams(2, 0), Target::mds, SearchMode::all, 1});
  for (std::size_t i = 0; i < codes.size(); i += 61) {
    const MdsCode c(codes[i]);
    const auto cls = classify(c);
    EXPECT_TRUE(cls.semilinear() || cls.reducible());
    if (cls.semilinear()) {
      EXPECT_TRUE(c.set().is_subset_of(cls.linear_witness->set()));
    }
    if (cls.reducible()) {
      EXPECT_EQ(cls.reducible_witness->reconstruct(c.params()), c.set());
    }
  }
}

}  // namespace
}  // namespace doob
