#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordolab/core.hpp"
#include "ordolab/random.hpp"
#include "ordolab/simplex.hpp"

namespace ordolab::mlvc {

// Jobs 0..n-1 are vertices (p = 1, w = 0); job n + i is hyperedge i
// (p = 0, w = 1). Vertex v precedes every hyperedge containing it.
struct SchedulingPoset {
  int num_vertices = 0;
  std::size_t num_edges = 0;
  std::vector<int> processing;
  std::vector<int> weight;
  // (earlier job, later job).
  std::vector<std::pair<int, int>> precedences;

  std::size_t num_jobs() const { return processing.size(); }
  bool is_vertex(int job) const { return job < num_vertices; }
};

SchedulingPoset build_poset(const Hypergraph& hypergraph);

// Sum over hyperedges of the largest label of their vertices.
std::int64_t mlsc_objective(const Hypergraph& hypergraph, const Ordering& labels);

// Uniform vertex permutation with every hyperedge scheduled as soon as its
// last vertex arrives; hyperedges completing together are shuffled.
std::vector<int> sample_extension(const Hypergraph& hypergraph, Rng& rng);
std::vector<int> sample_extension(const Hypergraph& hypergraph, std::uint64_t seed);

bool is_linear_extension(const SchedulingPoset& poset, const std::vector<int>& jobs);

// Vertex jobs in schedule order.
Ordering induced_vertex_order(const SchedulingPoset& poset, const std::vector<int>& jobs);

// Overlap profile of two incomparable jobs viewed as vertex sets (a vertex is
// a singleton): a = |A - B|, b = |B - A|, c = |A & B|.
struct OverlapProfile {
  int a = 0;
  int b = 0;
  int c = 0;
};

OverlapProfile overlap(const Hypergraph& hypergraph, int first_job, int second_job);

// Exact probability that the sampler schedules A before B: (b + c/2)/(a+b+c).
Rational pair_probability(const OverlapProfile& profile);

struct PairEstimate {
  int first_job = 0;
  int second_job = 0;
  OverlapProfile profile;
  Rational exact;
  // Empirical frequency of first_job before second_job.
  double estimate = 0;
  double stddev = 0;
  // min(estimate, 1 - estimate) + 3 stddev falls below the floor.
  bool flagged = false;
};

struct BalanceReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  // 1 / (1 + ell), ell the largest hyperedge size.
  Rational floor;
  std::vector<PairEstimate> pairs;
  // Index into pairs of the smallest min(estimate, 1 - estimate).
  std::size_t worst_pair = 0;
};

// Trials are split into fixed chunks, each with its own stream seeded by
// (seed, chunk), so results do not depend on `jobs`.
BalanceReport balance_check(const Hypergraph& hypergraph, std::size_t trials,
                            std::uint64_t seed, std::size_t jobs = 1);

struct BestOfN {
  Ordering labels;
  std::int64_t value = 0;
};

BestOfN best_of_n(const Hypergraph& hypergraph, std::size_t samples, std::uint64_t seed);

// Minimum MLSC objective over all n! labelings. Throws CapacityError for
// n > 10.
BestOfN brute_force_mlsc(const Hypergraph& hypergraph);

struct LpModel {
  int n = 0;
  std::size_t num_edges = 0;
  lp::LinearProgram program;
  // u_index[e][t-1], x_index[v][t-1].
  std::vector<std::vector<int>> u_index;
  std::vector<std::vector<int>> x_index;
};

// Minimize sum u_{e,t} s.t. sum_v x_{v,t} <= 1 and
// u_{e,t} + sum_{t' < t} x_{v,t'} >= 1 for v in e, all t.
LpModel build_lp(const Hypergraph& hypergraph);

// Exact LP optimum. Throws CapacityError beyond max_variables.
Rational solve_lp(const LpModel& model, std::size_t max_variables = 200);

std::string emit_lp(const LpModel& model);

struct CliqueGap {
  Integer integer_optimum;
  Rational fractional_value;
  Rational ratio;
};

// K_n: integer optimum sum_{i=2}^n i(i-1) against the uniform fractional
// point x = 1/n, u_{e,t} = 1 - (t-1)/n.
CliqueGap clique_gap(int n);

}  // namespace ordolab::mlvc
