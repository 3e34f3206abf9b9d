#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ordolab/core.hpp"
#include "ordolab/matroids.hpp"
#include "ordolab/partition.hpp"

namespace ordolab::solve {

// Subset DP runs over 2^m states.
inline constexpr std::size_t kExactCap = 20;

struct Solution {
  Rational value;
  Ordering ordering;
};

// best(S) = f(S) + min over e in S of best(S - e). Throws CapacityError above
// `cap` elements.
Solution exact_mlop_dp(const SetFunction& f, std::size_t cap = kExactCap);

// best(S) = min over e in S of best(S - e) + f(S) c(e), e being last in S.
Solution exact_weighted_mlop_dp(const SetFunction& f, std::span<const std::int64_t> costs,
                                std::size_t cap = kExactCap);

// (k+1 choose 2) + k (m - k), the MLOP optimum of U_k^m.
Integer uniform_closed_form(std::int64_t k, std::int64_t m);

struct BoundCertificate {
  Rational lower;
  Rational upper;
  // 2 - (1 + ell) / (1 + m).
  Rational guarantee;
  bool trivial = false;
};

struct Approximation {
  Ordering ordering;
  Rational value;
  BoundCertificate certificate;
  Subset zero_set;
  // Principal partition of the contracted function lifted back to E, so every
  // set of the chain contains the zero set.
  partition::PrincipalPartition partition;
};

// Zero set first, then the cells of the principal partition of the
// contracted function; inside a cell by singleton value, then label.
Approximation approx_monotone_mlop(const SetFunction& f, const sfm::SfmOptions& options = {});

// Lower and upper sandwich evaluated on a principal partition of f. f must
// vanish only on the empty set. Throws when pp does not run from empty to E.
Rational pp_lower_bound(const SetFunction& f, const partition::PrincipalPartition& pp);
Rational pp_upper_bound(const SetFunction& f, const partition::PrincipalPartition& pp);

// basis_order lists the basis elements by their position 1..k. The result is
// the full MLOP value (k+1 choose 2) + sum over e outside B of max C(B,e).
std::int64_t fixed_basis_objective(const matroids::Matroid& m, const Subset& basis,
                                   const std::vector<int>& basis_order);

// Basis elements in order; every other e goes right after the basis element
// holding the largest position in its fundamental circuit (loops first).
Ordering fixed_basis_extension(const matroids::Matroid& m, const Subset& basis,
                               const std::vector<int>& basis_order);

// All bases in lexicographic order of their sorted element lists.
std::vector<Subset> enumerate_bases(const matroids::Matroid& m, std::size_t max_bases);

struct BasisSearchLimits {
  std::size_t max_bases = 5000;
  std::size_t max_rank = 9;
  std::size_t jobs = 1;
};

// Minimum of fixed_basis_objective over every basis and every basis order.
Solution small_basis_exact(const matroids::Matroid& m, const BasisSearchLimits& limits = {});

// Every block a single edge, a loop, or a cycle.
bool is_cactus(const Graph& graph);

// Edge labels of each block (biconnected component); loops are their own
// blocks.
std::vector<std::vector<int>> edge_blocks(const Graph& graph);

// Loops first, then cycle blocks by ascending size (ties by smallest edge
// label, edges inside a block by label), then bridges. Throws
// std::invalid_argument on non-cacti.
Solution cactus_exact(const Graph& graph);

// True when every prefix that ends a rank plateau of the ordering is a flat.
bool has_flat_structure(const matroids::Matroid& m, const Ordering& order);

}  // namespace ordolab::solve
