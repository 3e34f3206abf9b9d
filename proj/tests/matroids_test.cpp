#include "ordolab/matroids.hpp"

#include "gtest/gtest.h"
#include "ordolab/reductions.hpp"
#include "ordolab/solve.hpp"
#include "ordolab/testing/oracles.hpp"

namespace ordolab::matroids {
namespace {

using ordolab::testing::bowtie;
using ordolab::testing::is_monotone;
using ordolab::testing::is_submodular;

TEST(RankTest, Examples) {
  EXPECT_EQ(uniform(3, 2).rank(Subset{0, 2}), 2);
  EXPECT_EQ(graphic(Graph::complete(3)).rank(Subset{0, 1, 2}), 2);
  EXPECT_EQ(vector(IntMatrix{{1, 0, 1}, {0, 1, 1}}).rank(Subset{0, 1, 2}), 2);
}

TEST(RankTest, OutOfRangeElementThrows) {
  EXPECT_THROW(uniform(3, 2).rank(Subset{3}), std::out_of_range);
}

TEST(RankTest, BareissHandlesLargeEntries) {
  const IntMatrix a{{1000000007, 2, 3}, {2000000014, 4, 7}};
  EXPECT_EQ(column_rank(a, {0, 1}), 1);
  EXPECT_EQ(column_rank(a, {0, 1, 2}), 2);
  // Over GF(2) the second row is 0 0 1.
  EXPECT_EQ(column_rank(IntMatrix{{1, 1}, {1, 1}}, {0, 1}, 2), 1);
  EXPECT_EQ(column_rank(IntMatrix{{2, 0}, {0, 1}}, {0, 1}, 2), 1);
}

TEST(CorankTest, Examples) {
  EXPECT_EQ(corank(uniform(2, 1), Subset{1}), 1);
  EXPECT_EQ(corank(graphic(bowtie()), Subset()), 0);
  EXPECT_EQ(corank(uniform(3, 1), Subset{0, 1, 2}), 2);
}

TEST(DualTest, DoubleDualMatchesRank) {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Matroid m = graphic(ordolab::testing::random_multigraph(rng, 5, 8, true));
    const Matroid dd = dual(dual(m));
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      const Subset s = Subset::from_mask(mask);
      ASSERT_EQ(dd.rank(s), m.rank(s));
    }
  }
}

TEST(DualTest, DualIsAMatroidRank) {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Matroid m = vector(ordolab::testing::random_matrix(rng, 3, 7, 2));
    const SetFunction r = dual(m).rank_function();
    EXPECT_TRUE(is_submodular(r));
    EXPECT_TRUE(is_monotone(r));
    EXPECT_EQ(dual(m).full_rank(), 7 - m.full_rank());
  }
}

TEST(ShippedOraclesTest, AreSubmodular) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = ordolab::testing::random_multigraph(rng, 6, 10, true);
    EXPECT_TRUE(is_submodular(graphic(g).rank_function()));
    EXPECT_TRUE(is_monotone(graphic(g).rank_function()));
    EXPECT_TRUE(is_submodular(vector(ordolab::testing::random_matrix(rng, 3, 10, 3))
                                  .rank_function()));
    const Graph w = ordolab::testing::random_weighted_graph(rng, 8, 12, 5);
    EXPECT_TRUE(is_submodular(cut_function(w)));
  }
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_TRUE(is_submodular(uniform(6, k).rank_function()));
}

TEST(CutFunctionTest, IsSymmetric) {
  Rng rng(14);
  const Graph g = ordolab::testing::random_weighted_graph(rng, 10, 20, 4);
  const SetFunction f = cut_function(g);
  const Subset full = f.full();
  EXPECT_EQ(f(Subset()), 0);
  EXPECT_EQ(f(full), 0);
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const Subset s = Subset::from_mask(mask);
    ASSERT_EQ(f(s), f(full - s));
  }
}

TEST(GraphicRankTest, MatchesGf2IncidenceRank) {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = ordolab::testing::random_multigraph(rng, 7, 10, true);
    const Matroid m = graphic(g);
    for (int sample = 0; sample < 50; ++sample) {
      const Subset s = Subset::from_mask(rng.below(1024));
      ASSERT_EQ(m.rank(s), ordolab::testing::incidence_rank_gf2(g, s));
      ASSERT_EQ(m.rank(s), ordolab::testing::graphic_rank_naive(g, s));
    }
  }
}

TEST(DuplicateTest, Examples) {
  const std::vector<std::int64_t> three{3};
  const Duplication single = duplicate(uniform(1, 1), three);
  EXPECT_EQ(single.matroid.size(), 3u);
  for (std::uint64_t mask = 1; mask < 8; ++mask) {
    EXPECT_EQ(single.matroid.rank(Subset::from_mask(mask)), 1);
  }
  EXPECT_EQ(single.origin, (std::vector<int>{0, 0, 0}));

  const std::vector<std::int64_t> ones{1, 1, 1, 1};
  const Duplication same = duplicate(graphic(ordolab::testing::triangle_plus_bridge()), ones);
  EXPECT_EQ(same.origin, (std::vector<int>{0, 1, 2, 3}));

  const std::vector<std::int64_t> two{2};
  const Duplication doubled = duplicate(graphic(Graph::complete(2)), two);
  EXPECT_EQ(doubled.matroid.rank(Subset{0, 1}), 1);

  const std::vector<std::int64_t> zero{0};
  EXPECT_THROW(duplicate(uniform(1, 1), zero), std::invalid_argument);
}

TEST(DuplicateTest, RankIsRankOfProjection) {
  const Matroid base = graphic(bowtie());
  const std::vector<std::int64_t> costs{2, 1, 3, 1, 2, 1};
  const Duplication d = duplicate(base, costs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.matroid.size()); ++mask) {
    Subset projected;
    Subset::from_mask(mask).for_each(
        [&](int e) { projected.insert(d.origin[static_cast<std::size_t>(e)]); });
    ASSERT_EQ(d.matroid.rank(Subset::from_mask(mask)), base.rank(projected));
  }
}

TEST(FundamentalCircuitTest, Triangle) {
  const Matroid k3 = graphic(Graph::complete(3));
  // Edges: 0 = 01, 1 = 02, 2 = 12.
  EXPECT_EQ(fundamental_circuit(k3, Subset{0, 2}, 1), (Subset{0, 1, 2}));
  EXPECT_THROW(fundamental_circuit(k3, Subset{0}, 1), std::invalid_argument);
}

TEST(FundamentalCircuitTest, ApexStarTriangles) {
  const auto r = reductions::mlvc_to_weighted_graphic(Graph::complete(3));
  const Graph& h = r.apex_graph;
  Subset star;
  for (std::size_t i = 3; i < h.num_edges(); ++i) star.insert(static_cast<int>(i));
  for (int e = 0; e < 3; ++e) {
    const Subset c = graphic_fundamental_circuit(h, star, e);
    EXPECT_EQ(c.count(), 3u);
    EXPECT_EQ(c, fundamental_circuit(graphic(h), star, e));
    const Edge& uv = h.edge(static_cast<std::size_t>(e));
    c.for_each([&](int f) {
      if (f == e) return;
      const Edge& spoke = h.edge(static_cast<std::size_t>(f));
      EXPECT_TRUE(spoke.u == uv.u || spoke.v == uv.u || spoke.u == uv.v || spoke.v == uv.v);
    });
  }
}

TEST(FundamentalCircuitTest, BowtieChord) {
  const Graph g = bowtie();
  // Tree: 01, 12, 23, 34; chord 02 closes the left triangle.
  const Subset tree{0, 1, 3, 4};
  EXPECT_EQ(graphic_fundamental_circuit(g, tree, 2), (Subset{0, 1, 2}));
  EXPECT_EQ(fundamental_circuit(graphic(g), tree, 2), (Subset{0, 1, 2}));
}

TEST(IsUniformTest, Examples) {
  EXPECT_TRUE(is_uniform_via_mlop(vector(IntMatrix{{1, 0}, {0, 1}})));
  EXPECT_TRUE(is_uniform_via_mlop(vector(IntMatrix{{1, 0, 1}, {0, 1, 1}})));
  const Matroid parallel = vector(IntMatrix{{1, 0, 1}, {0, 1, 0}});
  EXPECT_FALSE(is_uniform_via_mlop(parallel));
  EXPECT_EQ(solve::exact_mlop_dp(parallel.rank_function()).value, 4);
}

TEST(IsUniformTest, AgreesWithTwoSubsetCheck) {
  Rng rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid m = vector(ordolab::testing::random_matrix(rng, 2, 5, 2));
    const std::int64_t k = m.full_rank();
    bool uniform_by_rank = true;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      const Subset s = Subset::from_mask(mask);
      uniform_by_rank = uniform_by_rank &&
                        m.rank(s) == std::min<std::int64_t>(static_cast<std::int64_t>(s.count()), k);
    }
    EXPECT_EQ(is_uniform_via_mlop(m), uniform_by_rank);
  }
}

}  // namespace
}  // namespace ordolab::matroids
