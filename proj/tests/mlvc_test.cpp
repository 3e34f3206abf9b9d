#include "ordolab/mlvc.hpp"

#include "gtest/gtest.h"
#include "ordolab/testing/oracles.hpp"

namespace ordolab::mlvc {
namespace {

Hypergraph graph_of(const Graph& g) { return Hypergraph::from_graph(g); }

TEST(PosetTest, Examples) {
  const SchedulingPoset k2 = build_poset(graph_of(Graph::complete(2)));
  EXPECT_EQ(k2.num_jobs(), 3u);
  EXPECT_EQ(k2.precedences.size(), 2u);
  const SchedulingPoset k3 = build_poset(graph_of(Graph::complete(3)));
  EXPECT_EQ(k3.num_jobs(), 6u);
  EXPECT_EQ(k3.precedences.size(), 6u);
  EXPECT_EQ(k3.processing, (std::vector<int>{1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(k3.weight, (std::vector<int>{0, 0, 0, 1, 1, 1}));
  const Hypergraph triple(3, {{0, 1, 2}});
  EXPECT_EQ(triple.max_edge_size(), 3u);
  EXPECT_EQ(build_poset(triple).precedences.size(), 3u);
}

TEST(PosetTest, EmptyHyperedgeRejected) {
  EXPECT_THROW(Hypergraph(2, {{0}, {}}), std::invalid_argument);
}

TEST(SamplerTest, ExtensionsAreValidAndMatchTheObjective) {
  const Hypergraph h(6, {{0, 1, 2}, {2, 3}, {3, 4, 5}, {1, 5}});
  const SchedulingPoset poset = build_poset(h);
  Rng rng(61);
  for (int i = 0; i < 500; ++i) {
    const std::vector<int> jobs = sample_extension(h, rng);
    ASSERT_TRUE(is_linear_extension(poset, jobs));
    // Weighted completion time equals the MLSC objective of the vertex order.
    std::int64_t clock = 0;
    std::int64_t weighted = 0;
    for (int j : jobs) {
      clock += poset.processing[static_cast<std::size_t>(j)];
      weighted += poset.weight[static_cast<std::size_t>(j)] * clock;
    }
    EXPECT_EQ(weighted, mlsc_objective(h, induced_vertex_order(poset, jobs)));
  }
}

TEST(SamplerTest, SeededRunsReproduce) {
  const Hypergraph h = graph_of(Graph::cycle(5));
  EXPECT_EQ(sample_extension(h, 7), sample_extension(h, 7));
}

TEST(SamplerTest, K2EdgeAlwaysLast) {
  const Hypergraph h = graph_of(Graph::complete(2));
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_EQ(sample_extension(h, seed).back(), 2);
}

TEST(PairProbabilityTest, Examples) {
  const Hypergraph k3 = graph_of(Graph::complete(3));
  // Edge 01 (job 3) against vertex 2.
  const OverlapProfile edge_vs_vertex = overlap(k3, 3, 2);
  EXPECT_EQ(pair_probability(edge_vs_vertex), make_rational(1, 3));
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  const OverlapProfile disjoint = overlap(graph_of(two), 4, 5);
  EXPECT_EQ(disjoint.a, 2);
  EXPECT_EQ(disjoint.b, 2);
  EXPECT_EQ(pair_probability(disjoint), make_rational(1, 2));
  EXPECT_EQ(pair_probability(OverlapProfile{1, 1, 1}), make_rational(1, 2));
}

TEST(BalanceTest, GraphFloorAndK4) {
  const BalanceReport k4 = balance_check(graph_of(Graph::complete(4)), 100000, 0);
  EXPECT_EQ(k4.floor, make_rational(1, 3));
  for (const PairEstimate& p : k4.pairs) {
    EXPECT_GE(std::min(p.estimate, 1 - p.estimate), 1.0 / 3 - 0.01);
    EXPECT_FALSE(p.flagged);
  }
  const PairEstimate& worst = k4.pairs[k4.worst_pair];
  for (const PairEstimate& p : k4.pairs) {
    EXPECT_LE(std::min(worst.estimate, 1 - worst.estimate), std::min(p.estimate, 1 - p.estimate));
  }
}

TEST(BalanceTest, ResultDoesNotDependOnJobs) {
  const Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
  const BalanceReport one = balance_check(h, 20000, 3, 1);
  const BalanceReport four = balance_check(h, 20000, 3, 4);
  ASSERT_EQ(one.pairs.size(), four.pairs.size());
  for (std::size_t i = 0; i < one.pairs.size(); ++i) {
    EXPECT_EQ(one.pairs[i].estimate, four.pairs[i].estimate);
  }
  EXPECT_EQ(one.floor, make_rational(1, 4));
}

TEST(BestOfNTest, Examples) {
  EXPECT_EQ(best_of_n(graph_of(Graph::complete(3)), 1, 5).value, 8);
  EXPECT_EQ(best_of_n(graph_of(Graph::cycle(4)), 200, 0).value, 13);
  EXPECT_EQ(ordolab::testing::brute_force_mlvc(Graph::cycle(4)), 13);
  EXPECT_EQ(best_of_n(graph_of(Graph::path(3)), 50, 0).value, 5);
  const BestOfN a = best_of_n(graph_of(Graph::cycle(6)), 30, 9);
  const BestOfN b = best_of_n(graph_of(Graph::cycle(6)), 30, 9);
  EXPECT_EQ(a.labels, b.labels);
}

TEST(BruteForceMlscTest, MatchesGraphOracle) {
  Rng rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = ordolab::testing::random_connected_graph(rng, 6, 8);
    EXPECT_EQ(brute_force_mlsc(graph_of(g)).value, ordolab::testing::brute_force_mlvc(g));
  }
  EXPECT_THROW(brute_force_mlsc(graph_of(Graph::path(11))), CapacityError);
}

TEST(LpTest, Examples) {
  EXPECT_EQ(solve_lp(build_lp(graph_of(Graph::cycle(4)))), 10);
  EXPECT_EQ(solve_lp(build_lp(graph_of(Graph::complete(2)))), make_rational(3, 2));
  EXPECT_EQ(solve_lp(build_lp(graph_of(Graph::complete(4)))), 15);
}

TEST(LpTest, ModelShape) {
  const Hypergraph h(4, {{0, 1, 2}, {2, 3}});
  const LpModel model = build_lp(h);
  EXPECT_EQ(model.program.variables.size(), 2u * 4 + 4u * 4);
  EXPECT_EQ(model.program.constraints.size(), 4u + 4u * 5);
  for (const auto& c : model.program.constraints) {
    for (const auto& [var, coef] : c.terms) EXPECT_TRUE(coef == 1 || coef == -1);
  }
}

TEST(LpTest, RegularGraphsMatchClosedForm) {
  for (int n = 3; n <= 6; ++n) {
    const Graph c = Graph::cycle(n);
    EXPECT_EQ(solve_lp(build_lp(graph_of(c))), make_rational(2 * n * (n + 1), 4));
  }
  Graph k33(6);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
  }
  EXPECT_EQ(solve_lp(build_lp(graph_of(k33))), make_rational(3 * 6 * 7, 4));
}

TEST(LpTest, WeakDuality) {
  Rng rng(63);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = rng.uniform_int(3, 6);
    const Graph g = ordolab::testing::random_connected_graph(rng, n, n);
    EXPECT_LE(solve_lp(build_lp(graph_of(g))), ordolab::testing::brute_force_mlvc(g));
  }
}

TEST(LpTest, CapAndEmit) {
  const LpModel big = build_lp(graph_of(Graph::complete(8)));
  EXPECT_THROW(solve_lp(big), CapacityError);
  const std::string text = emit_lp(build_lp(graph_of(Graph::complete(2))));
  EXPECT_NE(text.find("Minimize"), std::string::npos);
  EXPECT_NE(text.find("Subject To"), std::string::npos);
  EXPECT_NE(text.find("u_1_1"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
}

TEST(CliqueGapTest, Examples) {
  EXPECT_EQ(clique_gap(3).integer_optimum, 8);
  EXPECT_EQ(clique_gap(8).integer_optimum, 168);
  Rational prev = 0;
  for (int n = 2; n <= 64; ++n) {
    const CliqueGap g = clique_gap(n);
    EXPECT_GE(g.ratio, prev);
    EXPECT_LE(g.ratio, make_rational(4, 3));
    prev = g.ratio;
  }
}

TEST(CliqueGapTest, FractionalPointIsFeasibleAndAboveTheLp) {
  for (int n = 2; n <= 4; ++n) {
    const Rational lp = solve_lp(build_lp(graph_of(Graph::complete(n))));
    EXPECT_LE(lp, clique_gap(n).fractional_value);
  }
}

}  // namespace
}  // namespace ordolab::mlvc
