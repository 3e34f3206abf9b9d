#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ordolab/core.hpp"
#include "ordolab/sfm.hpp"

namespace ordolab::gomoryhu {

struct TreeEdge {
  int u = 0;
  int v = 0;
  Rational weight;
};

// Spanning tree on the ground {0..size-1}.
struct GomoryHuTree {
  int size = 0;
  std::vector<TreeEdge> edges;

  Rational total_weight() const;
  // Vertices on u's side once edges[index] is removed.
  Subset component(std::size_t index) const;
  std::vector<std::pair<int, int>> pairs() const;
};

// Throws std::invalid_argument unless f(empty) = f(A) = 0 and f(S) = f(A - S)
// (exhaustively for |A| <= 12, on sampled sets above).
void check_symmetric(const SetFunction& f, std::uint64_t seed = 0);

struct BuildStats {
  // Gusfield's tree failed verification and the contraction scheme ran.
  bool used_fallback = false;
};

// Gusfield's construction with pivots in a seeded random order, verified edge
// by edge; falls back to the contraction scheme if verification fails.
GomoryHuTree build_gh_tree(const SetFunction& f, std::uint64_t seed = 0,
                           const sfm::SfmOptions& options = {}, BuildStats* stats = nullptr);

// Classic construction by splitting supernodes on contracted functions.
GomoryHuTree build_gh_tree_contraction(const SetFunction& f, const sfm::SfmOptions& options = {});

// For every tree edge (s, t): f(component) = w and the minimum s-t cut is w.
bool verify_cut_property(const SetFunction& f, const GomoryHuTree& tree,
                         const sfm::SfmOptions& options = {});

// Sum of tree weights; never above the MLOP optimum of f.
Rational gh_lower_bound(const GomoryHuTree& tree);

struct UpperBound {
  Rational value;
  Ordering ordering;
  // Minimum weighted arrangement of the tree (|A| <= 12) rather than the DFS
  // order.
  bool exact = false;
};

// Weighted linear arrangement of the tree; never below the MLOP optimum of f.
UpperBound gh_upper_bound(const SetFunction& f, const GomoryHuTree& tree);

// Sum over tree edges of f(component of the edge).
Rational tree_cut_sum(const SetFunction& f, const std::vector<std::pair<int, int>>& tree);

// Every labeled spanning tree on `size` vertices, via Pruefer sequences.
std::vector<std::vector<std::pair<int, int>>> all_spanning_trees(int size);

struct TreeMlop {
  GomoryHuTree tree;
  Rational value;
  // Confirmed minimal over all spanning trees (|A| <= 6).
  bool certified = false;
};

TreeMlop tree_mlop(const SetFunction& f, std::uint64_t seed = 0,
                   const sfm::SfmOptions& options = {});

// partner[i] is the T2 edge matched to T1 edge i; T2 edge partner[i] lies on
// the T2 path between T1 edge i's endpoints. Throws std::logic_error if no
// perfect matching exists.
std::vector<int> matching_certificate(const std::vector<std::pair<int, int>>& t1,
                                      const std::vector<std::pair<int, int>>& t2, int size);

struct Invariance {
  bool equal = true;
  std::vector<Rational> totals;
};

Invariance gh_weight_invariance(const SetFunction& f, std::size_t runs, std::uint64_t seed,
                                const sfm::SfmOptions& options = {});

}  // namespace ordolab::gomoryhu
