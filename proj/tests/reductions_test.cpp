#include "ordolab/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"
#include "ordolab/solve.hpp"
#include "ordolab/testing/oracles.hpp"

namespace ordolab::reductions {
namespace {

using ordolab::testing::brute_force_mlvc;

std::int64_t brute_force_msvc(const Graph& g) {
  std::vector<int> seq(static_cast<std::size_t>(g.num_vertices()));
  std::iota(seq.begin(), seq.end(), 0);
  std::int64_t best = INT64_MAX;
  do {
    best = std::min(best, msvc_objective(g, Ordering::from_sequence(seq)));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

TEST(MlvcMsvcTest, Examples) {
  const MlvcMsvcShift k2 = mlvc_msvc_shift(Graph::complete(2), Ordering::identity(2));
  EXPECT_EQ(k2.certificate.source, 2);
  EXPECT_EQ(k2.certificate.shift, 2);
  EXPECT_EQ(k2.certificate.target, 0);
  EXPECT_TRUE(k2.certificate.holds());

  for (int n = 1; n <= 6; ++n) {
    const MlvcMsvcShift empty = mlvc_msvc_shift(Graph(n), Ordering::identity(n));
    std::int64_t expected = 0;
    for (int i = 1; i < n; ++i) expected += static_cast<std::int64_t>(i) * (n - i);
    EXPECT_EQ(empty.certificate.target, expected);
    EXPECT_EQ(empty.certificate.source, 0);
    EXPECT_TRUE(empty.certificate.holds());
  }

  const MlvcMsvcShift p3 = mlvc_msvc_shift(Graph::path(3), Ordering::from_sequence({1, 0, 2}));
  EXPECT_EQ(p3.certificate.source, 5);
  EXPECT_TRUE(p3.certificate.holds());
  EXPECT_EQ(p3.labels.position(1), 3);
}

TEST(MlvcMsvcTest, NonSimpleRejected) {
  EXPECT_THROW(mlvc_msvc_shift(ordolab::testing::parallel_edges(2), Ordering::identity(2)),
               std::invalid_argument);
}

TEST(MlvcMsvcTest, OptimaTransfer) {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(2, 6);
    const Graph g = ordolab::testing::graph_from_mask(
        n, rng.below(std::uint64_t{1} << (n * (n - 1) / 2)));
    const Integer c = mlvc_msvc_constant(n, g.complement().num_edges());
    EXPECT_EQ(Integer(brute_force_mlvc(g)), c + brute_force_msvc(g.complement()));
  }
}

TEST(DualTransferTest, Examples) {
  const DualTransfer u12 = dual_transfer(matroids::uniform(2, 1), Ordering::identity(2));
  EXPECT_EQ(u12.certificate.source, 2);
  EXPECT_EQ(u12.certificate.target, 2);
  EXPECT_EQ(u12.certificate.shift, 0);

  const DualTransfer u13 = dual_transfer(matroids::uniform(3, 1), Ordering::identity(3));
  EXPECT_EQ(u13.certificate.source, 3);
  EXPECT_EQ(u13.certificate.target, 5);
  EXPECT_EQ(u13.certificate.shift, -2);
  EXPECT_EQ(dual_constant(3, 1), -2);
  // The constant (m+1 choose 2) - r m would give 6 - 3 + 5 = 8.
  EXPECT_NE(Rational(6 - 3) + u13.certificate.target, u13.certificate.source);

  const matroids::Matroid u12m = matroids::uniform(2, 1);
  EXPECT_EQ(solve::exact_mlop_dp(matroids::dual(u12m).rank_function()).value, 2);
}

TEST(DualTransferTest, OptimaMapToOptima) {
  Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const matroids::Matroid m =
        matroids::graphic(ordolab::testing::random_multigraph(rng, 4, 7, true));
    const solve::Solution opt = solve::exact_mlop_dp(m.rank_function());
    const DualTransfer d = dual_transfer(m, opt.ordering);
    EXPECT_TRUE(d.certificate.holds());
    EXPECT_EQ(d.certificate.target, solve::exact_mlop_dp(d.dual.rank_function()).value);
  }
}

TEST(ApexReductionTest, K2) {
  const ApexReduction r = mlvc_to_weighted_graphic(Graph::complete(2));
  EXPECT_EQ(r.k, 11);
  EXPECT_EQ(r.apex_graph.num_edges(), 3u);
  EXPECT_EQ(r.costs, (std::vector<std::int64_t>{1, 11, 11}));
  EXPECT_EQ(r.offset, 33);
  const auto h = matroids::graphic(r.apex_graph).rank_function();
  const solve::Solution w = solve::exact_weighted_mlop_dp(h, r.costs);
  EXPECT_EQ(w.value, 35);
  const ReductionCertificate c = apex_certificate(Graph::complete(2), r, w);
  EXPECT_EQ(c.source, 2);
  EXPECT_TRUE(c.holds());
}

TEST(ApexReductionTest, P3) {
  const Graph p3 = Graph::path(3);
  const ApexReduction r = mlvc_to_weighted_graphic(p3);
  EXPECT_EQ(r.k, 38);
  const auto h = matroids::graphic(r.apex_graph).rank_function();
  const solve::Solution w = solve::exact_weighted_mlop_dp(h, r.costs);
  const ReductionCertificate c = apex_certificate(p3, r, w);
  EXPECT_EQ(c.source, 5);
  EXPECT_TRUE(c.holds());
}

TEST(ApexReductionTest, IsolatedVerticesGoLast) {
  Graph g(5);
  g.add_edge(1, 3);
  g.add_edge(3, 4);
  const ApexReduction r = mlvc_to_weighted_graphic(g);
  EXPECT_EQ(r.isolated_vertices, (std::vector<int>{0, 2}));
  const auto h = matroids::graphic(r.apex_graph).rank_function();
  const solve::Solution w = solve::exact_weighted_mlop_dp(h, r.costs);
  const std::optional<Ordering> labels = recover_labeling(r, w.ordering);
  ASSERT_TRUE(labels.has_value());
  EXPECT_EQ(labels->position(0), 4);
  EXPECT_EQ(labels->position(2), 5);
  EXPECT_EQ(mlvc_objective(g, *labels), brute_force_mlvc(g));
  EXPECT_THROW(mlvc_to_weighted_graphic(Graph(3)), std::invalid_argument);
}

TEST(ApexReductionTest, DpOptimaAreGood) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : ordolab::testing::connected_graphs_up_to_isomorphism(n)) {
      if (g.num_edges() > 5) continue;
      const ApexReduction r = mlvc_to_weighted_graphic(g);
      const auto h = matroids::graphic(r.apex_graph).rank_function();
      const solve::Solution w = solve::exact_weighted_mlop_dp(h, r.costs);
      ASSERT_TRUE(recover_labeling(r, w.ordering).has_value());
      EXPECT_EQ(w.value - Rational(r.offset), brute_force_mlvc(g));
    }
  }
}

TEST(WeightedToUnweightedTest, Examples) {
  const matroids::Matroid tb = matroids::graphic(ordolab::testing::triangle_plus_bridge());
  const std::vector<std::int64_t> ones{1, 1, 1, 1};
  const WeightedToUnweighted same = weighted_to_unweighted(tb, ones, Ordering::identity(4));
  EXPECT_EQ(same.certificate.source, same.certificate.target);
  EXPECT_EQ(same.certificate.source, 8);

  const std::vector<std::int64_t> three{3};
  const WeightedToUnweighted single =
      weighted_to_unweighted(matroids::uniform(1, 1), three, Ordering::identity(1));
  EXPECT_EQ(single.certificate.source, 3);
  EXPECT_EQ(solve::exact_mlop_dp(single.expanded.matroid.rank_function()).value, 3);

  const std::vector<std::int64_t> two{2};
  const WeightedToUnweighted k2 =
      weighted_to_unweighted(matroids::graphic(Graph::complete(2)), two, Ordering::identity(1));
  EXPECT_EQ(solve::exact_mlop_dp(k2.expanded.matroid.rank_function()).value, 2);
}

TEST(WeightedToUnweightedTest, OptimaAgree) {
  Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const matroids::Matroid m =
        matroids::graphic(ordolab::testing::random_multigraph(rng, 4, 5, true));
    std::vector<std::int64_t> costs;
    for (int e = 0; e < 5; ++e) costs.push_back(rng.uniform_int(1, 3));
    const solve::Solution w = solve::exact_weighted_mlop_dp(m.rank_function(), costs);
    const WeightedToUnweighted u = weighted_to_unweighted(m, costs, w.ordering);
    EXPECT_TRUE(u.certificate.holds());
    EXPECT_EQ(solve::exact_mlop_dp(u.expanded.matroid.rank_function()).value, w.value);
  }
}

TEST(RegularShiftTest, Examples) {
  const ReductionCertificate k2 = regular_shift(Graph::complete(2), Ordering::identity(2));
  EXPECT_EQ(k2.source, 1);
  EXPECT_EQ(k2.target, 2);
  EXPECT_EQ(k2.shift, -3);
  Rng rng(54);
  for (int i = 0; i < 10; ++i) {
    const ReductionCertificate c4 =
        regular_shift(Graph::cycle(4), ordolab::testing::random_ordering(rng, 4));
    EXPECT_EQ(c4.scale, 2);
    EXPECT_EQ(c4.shift, -20);
    EXPECT_TRUE(c4.holds());
  }
  EXPECT_THROW(regular_shift(Graph::path(3), Ordering::identity(3)), std::invalid_argument);
}

}  // namespace
}  // namespace ordolab::reductions
