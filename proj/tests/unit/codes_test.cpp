#include <gtest/gtest.h>

#include <bit>

#include "doob/doob.hpp"
#include "helpers.hpp"

namespace doob {
namespace {

using testing::sh_set;
using testing::sh_where;

VertexSet rows_0_2() { return sh_set({"00", "01", "02", "03", "20", "21", "22", "23"}); }

TEST(Catalog, ShrikhandeCounts) {
  const auto& cat = sh_catalog();
  EXPECT_EQ(cat.mds.size(), 16U);
  EXPECT_EQ(cat.two_mds.size(), 42U);
  for (const auto m : cat.mds) EXPECT_EQ(std::popcount(m), 4);
  for (const auto m : cat.two_mds) EXPECT_EQ(std::popcount(m), 8);
}

TEST(IsMds, Examples) {
  EXPECT_TRUE(is_mds(sh_set({"00", "02", "20", "22"})));
  EXPECT_TRUE(is_mds(sh_set({"00", "02", "21", "23"})));
  EXPECT_FALSE(is_mds(VertexSet::full(DoobParams(1, 0))));
  EXPECT_FALSE(is_mds(sh_set({"00", "02", "20"})));
  EXPECT_THROW(MdsCode(sh_set({"00", "01", "20", "22"})), InvalidCode);
}

TEST(IsTwoMds, Examples) {
  EXPECT_TRUE(is_two_mds(rows_0_2()));
  EXPECT_FALSE(is_two_mds(VertexSet(DoobParams(1, 0))));
  EXPECT_TRUE(is_two_mds(sh_where([](int a, int b) { return (a + b) % 2 == 1; })));
  EXPECT_TRUE(is_two_mds(testing::set_of(DoobParams(0, 1), {"00", "11"})));
  EXPECT_FALSE(is_two_mds(testing::set_of(DoobParams(0, 1), {"00"})));
}

TEST(IsTwoMds, ProductNeedsEveryFiber) {
  // rows {0,2} in every Sh fiber of D(1,1) fails the K4 fibers (4 or 0 per fiber).
  const DoobParams p(1, 1);
  VertexSet s(p);
  for (VertexIndex v = 0; v < 64; ++v) {
    const int a = p.digit(v, 0) / 4;
    if (a % 2 == 0) s.insert(v);
  }
  EXPECT_FALSE(is_two_mds(s));
  // Pairing it with a K4 pair repairs it.
  VertexSet t(p);
  for (VertexIndex v = 0; v < 64; ++v) {
    const bool x = (p.digit(v, 0) / 4) % 2 == 0;
    const bool y = p.digit(v, 1) < 2;
    if (x != y) t.insert(v);
  }
  EXPECT_TRUE(is_two_mds(t));
}

TEST(ComplementCode, Involution) {
  const TwoMdsCode m(rows_0_2());
  const auto c = complement_code(m);
  EXPECT_EQ(c.set(), sh_where([](int a, int) { return a % 2 == 1; }));
  EXPECT_EQ(complement_code(c), m);
}

TEST(ComplementCode, LinearCodesPairUp) {
  const auto linear = enumerate_linear(DoobParams(1, 1));
  for (const auto& m : linear) {
    const auto c = complement_code(m);
    EXPECT_TRUE(is_linear(c));
    EXPECT_NE(std::find(linear.begin(), linear.end(), c), linear.end());
    EXPECT_NE(canonical_decomposition(m).sigma, canonical_decomposition(c).sigma);
  }
}

TEST(Components, Examples) {
  const auto list = components(rows_0_2());
  ASSERT_EQ(list.size(), 2U);
  EXPECT_EQ(list.components[0], sh_set({"00", "01", "02", "03"}));
  EXPECT_EQ(list.component_of(parse_vertex(DoobParams(1, 0), "22")), 1U);
  EXPECT_THROW((void)list.component_of(parse_vertex(DoobParams(1, 0), "11")), InvalidArgument);
  EXPECT_EQ(components(VertexSet(DoobParams(1, 0))).size(), 0U);
  const auto singles = components(sh_set({"00", "02", "20", "22"}));
  EXPECT_EQ(singles.size(), 4U);
  for (const auto& c : singles.components) EXPECT_EQ(c.count(), 1U);
}

TEST(Bipartite, RowsSplitIntoColumnsOfParity) {
  const auto parts = is_bipartite_two_mds(TwoMdsCode(rows_0_2()));
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->first.set(), sh_set({"00", "02", "20", "22"}));
  EXPECT_EQ(parts->second.set(), sh_set({"01", "03", "21", "23"}));
}

TEST(Bipartite, ConnectedCodesOfShrikhande) {
  // Every connected 2xMDS code of Sh; bipartiteness must agree with a direct
  // odd-cycle search on the induced subgraph.
  const auto g = DoobGraph::shared(DoobParams(1, 0));
  int connected = 0;
  for (const auto mask : sh_catalog().two_mds) {
    const auto s = VertexSet::from_mask(DoobParams(1, 0), mask);
    if (components(s).size() != 1) continue;
    ++connected;
    std::vector<int> side(16, -1);
    bool bipartite = true;
    std::vector<VertexIndex> stack{s.min_member()};
    side[s.min_member()] = 0;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto w : g->neighbors(u)) {
        if (!s.contains(w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          bipartite = false;
        }
      }
    }
    EXPECT_EQ(is_bipartite_two_mds(TwoMdsCode(s)).has_value(), bipartite);
  }
  EXPECT_GT(connected, 0);
}

TEST(Bipartite, DecomposableCodeOfK4Square) {
  const DoobParams p(0, 2);
  int seen = 0;
  for (const auto& s : collect_codes({p, Target::two_mds, SearchMode::all, 1})) {
    if (!canonical_decomposition(TwoMdsCode(s)).decomposable()) continue;
    ++seen;
    EXPECT_TRUE(is_bipartite_two_mds(TwoMdsCode(s)).has_value());
  }
  EXPECT_EQ(seen, 18);
}

TEST(MdsWithin, CountsArePowersOfTwo) {
  EXPECT_EQ(mds_codes_within(TwoMdsCode(rows_0_2())).size(), 4U);
  for (const auto& m : enumerate_linear(DoobParams(1, 1))) {
    const auto inside = mds_codes_within(m);
    EXPECT_EQ(components(m.set()).size(), 4U);
    EXPECT_EQ(inside.size(), 16U);
    for (const auto& c : inside) EXPECT_TRUE(c.set().is_subset_of(m.set()));
  }
}

TEST(MdsWithin, RejectsNonBipartite) {
  for (const auto p : {DoobParams(1, 0), DoobParams(0, 2), DoobParams(1, 1)}) {
    for (const auto& s : collect_codes({p, Target::two_mds, SearchMode::all, 1})) {
      const TwoMdsCode m(s);
      if (!is_bipartite_two_mds(m)) {
        EXPECT_THROW(mds_codes_within(m), InvalidArgument);
        return;
      }
    }
  }
  FAIL() << "expected a non-bipartite 2xMDS code in D(1,1)";
}

TEST(LatinColoring, IdentityOfK4GivesTheDiagonal) {
  const LatinColoring f(DoobParams(0, 1), {0, 1, 2, 3});
  const auto g = graph_of_coloring(f);
  EXPECT_EQ(g.set(), testing::set_of(DoobParams(0, 2), {"00.00", "01.01", "10.10", "11.11"}));
  EXPECT_EQ(coloring_from_mds(g, 2), f);
  EXPECT_EQ(coloring_from_mds(g, 1), f);
  EXPECT_THROW(LatinColoring(DoobParams(0, 1), {0, 1, 2, 2}), InvalidCode);
}

TEST(LatinColoring, ShrikhandeRoundTrips) {
  const auto all = enumerate_latin_colorings(DoobParams(1, 0));
  EXPECT_EQ(all.size(), 240U);
  for (const auto& f : all) {
    const auto g = graph_of_coloring(f);
    EXPECT_EQ(g.set().count(), 16U);
    EXPECT_EQ(coloring_from_mds(g, 1), f);
    for (int c = 0; c < 4; ++c) EXPECT_TRUE(is_mds(f.color_class(c)));
  }
}

TEST(LatinColoring, NeedsAK4Coordinate) {
  EXPECT_THROW(coloring_from_mds(MdsCode(sh_set({"00", "02", "20", "22"})), 1), InvalidArgument);
  const MdsCode diag(testing::set_of(DoobParams(0, 2), {"00.00", "01.01", "10.10", "11.11"}));
  EXPECT_THROW(coloring_from_mds(diag, 3), InvalidArgument);
}

TEST(EdgeBoundary, Examples) {
  const DoobParams sh(1, 0);
  EXPECT_EQ(edge_boundary_size(rows_0_2()), 32U);
  EXPECT_EQ(edge_boundary_size(VertexSet::full(sh)), 0U);
  EXPECT_EQ(edge_boundary_size(sh_set({"13"})), 6U);
  EXPECT_EQ(max_edge_boundary(sh), 32U);
  EXPECT_EQ(max_edge_boundary(DoobParams(2, 1)), 5U * 1024U);
}

TEST(EdgeBoundary, MaximumExactlyOnTwoMds) {
  const DoobParams sh(1, 0);
  int hits = 0;
  for (std::uint64_t mask = 0; mask < 65536; ++mask) {
    const auto s = VertexSet::from_mask(sh, mask);
    const auto b = edge_boundary_size(s);
    EXPECT_LE(b, 32U);
    if (b == 32) {
      ++hits;
      EXPECT_TRUE(sh_catalog().is_two_mds[mask]);
    }
  }
  EXPECT_EQ(hits, 42);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const auto s = VertexSet::from_mask(DoobParams(0, 1), mask);
    EXPECT_EQ(edge_boundary_size(s) == 4, std::popcount(mask) == 2);
  }
}

TEST(HalvingSet, Examples) {
  EXPECT_TRUE(is_halving_set(rows_0_2()));
  EXPECT_FALSE(is_halving_set(sh_set({"00", "01", "02", "03", "20", "21", "22"})));
  // Latin-square pattern: two per row and two per column.
  const DoobParams p(0, 2);
  VertexSet s(p);
  for (int x = 0; x < 4; ++x) {
    s.insert(static_cast<VertexIndex>(4 * x + x));
    s.insert(static_cast<VertexIndex>(4 * x + (x + 1) % 4));
  }
  EXPECT_TRUE(is_halving_set(s));
  // Without Shrikhande coordinates the two notions coincide.
  EXPECT_TRUE(is_two_mds(s));
}

TEST(Traces, MdsCodesRestrictToMdsCodes) {
  for (const auto p : {DoobParams(1, 1), DoobParams(2, 0)}) {
    const auto codes = collect_codes({p, Target::mds, SearchMode::all, 1});
    ASSERT_FALSE(codes.empty());
    for (std::size_t i = 0; i < codes.size(); i += (p.m() == 2 ? 37 : 1)) {
      for (int c = 0; c < p.coordinate_count(); ++c) {
        const SubProduct fiber(p, {c});
        const auto rest = fiber.complement();
        for (VertexIndex ctx = 0; ctx < rest.sub().vertex_count(); ++ctx) {
          EXPECT_TRUE(is_mds(fiber.restrict(codes[i], rest.embed(ctx))));
        }
      }
    }
  }
}

TEST(Traces, TwoMdsCodesRestrictToTwoMdsCodes) {
  for (const auto& s : collect_codes({DoobParams(1, 1), Target::two_mds, SearchMode::all, 1})) {
    for (const auto& f : fibers_along(s.params(), 0)) {
      EXPECT_TRUE(sh_catalog().is_two_mds[f.trace(s)]);
    }
  }
}

TEST(PairsOfTwoMds, EqualDisjointOrFullyMeeting) {
  int meeting = 0;
  std::vector<VertexSet> all;
  for (const auto mask : sh_catalog().two_mds) all.push_back(VertexSet::from_mask(DoobParams(1, 0), mask));
  for (const auto& m : all) {
    const auto cm = components(m);
    for (const auto& n : all) {
      const auto cn = components(n);
      bool every_pair_meets = true;
      for (const auto& x : cm.components) {
        for (const auto& y : cn.components) every_pair_meets = every_pair_meets && x.intersects(y);
      }
      if (m == n || !m.intersects(n)) continue;
      EXPECT_TRUE(every_pair_meets);
      ++meeting;
    }
  }
  EXPECT_GT(meeting, 0);
}

TEST(Multicomponents, NeighbourhoodIsUnionOfComplementComponents) {
  for (const auto& s : collect_codes({DoobParams(0, 2), Target::two_mds, SearchMode::all, 1})) {
    const auto g = DoobGraph::shared(s.params());
    const auto mine = components(s);
    const auto theirs = components(s.complement());
    const auto n = mine.size();
    for (std::uint32_t pick = 1; pick < (1U << n); ++pick) {
      VertexSet l(s.params());
      for (std::size_t i = 0; i < n; ++i) {
        if ((pick >> i) & 1U) l |= mine.components[i];
      }
      const auto nbhd = g->closed_neighborhood(l) - l;
      for (const auto& c : theirs.components) {
        EXPECT_TRUE(c.is_subset_of(nbhd) || !c.intersects(nbhd));
      }
    }
  }
}

}  // namespace
}  // namespace doob
