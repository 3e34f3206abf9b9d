#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ordolab/core.hpp"

namespace ordolab::sfm {

// Minimizers of a submodular function form a lattice; the two reported sets
// are its bottom and top.
struct SfmResult {
  Rational min_value;
  Subset minimal_minimizer;
  Subset maximal_minimizer;
  // False only when the min-norm-point path could not close the gap between
  // its best set and its exact dual bound.
  bool certified = true;
  Rational lower_bound;
};

struct SfmOptions {
  // Grounds up to this size are enumerated exhaustively.
  std::size_t exhaustive_cap = 20;
  bool force_min_norm_point = false;
  double tolerance = 1e-9;
  std::size_t max_iterations = 20000;
};

// min over X of f(X) - lambda |X|. f must be submodular.
SfmResult minimize_offset(const SetFunction& f, const Rational& lambda,
                          const SfmOptions& options = {});

// Same minimum restricted to X with include <= X and X disjoint from exclude.
SfmResult constrained_min(const SetFunction& f, const Rational& lambda, const Subset& include,
                          const Subset& exclude, const SfmOptions& options = {});

struct StCut {
  // Contains s, avoids t. The smallest minimum cut is reported.
  Subset side;
  Rational value;
};

// Minimum s-t cut of a symmetric function with f(empty) = f(ground) = 0.
StCut st_min_cut(const SetFunction& f, int s, int t, const SfmOptions& options = {});

// Fujishige-Wolfe minimum-norm point of the base polytope of a normalized
// submodular g. Exposed for testing.
struct MinNormPoint {
  std::vector<long double> point;
  // Extreme bases (as greedy orders) and their convex weights.
  std::vector<std::vector<int>> atoms;
  std::vector<long double> weights;
  std::size_t iterations = 0;
};

MinNormPoint min_norm_point(const SetFunction& g, double tolerance, std::size_t max_iterations);

// Extreme base of B(g) produced by the greedy algorithm along `order`.
std::vector<Rational> greedy_base(const SetFunction& g, const std::vector<int>& order);

}  // namespace ordolab::sfm
