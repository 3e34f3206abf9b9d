#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordolab/core.hpp"
#include "ordolab/matroids.hpp"
#include "ordolab/solve.hpp"

namespace ordolab::reductions {

// States source = scale * target + shift, with both sides evaluated from
// scratch on the produced instance pair.
struct ReductionCertificate {
  std::string relation;
  Rational source;
  Rational target;
  Rational scale{1};
  Rational shift;

  bool holds() const { return source == scale * target + shift; }
};

struct MlvcMsvcShift {
  Graph complement;
  // n + 1 - pi.
  Ordering labels;
  ReductionCertificate certificate;
};

// (n^3 - n)/3 - (n + 1) |E(complement)|.
Integer mlvc_msvc_constant(int n, std::size_t complement_edges);

// MLVC(G, pi) against MSVC(complement, n + 1 - pi). G must be simple.
MlvcMsvcShift mlvc_msvc_shift(const Graph& graph, const Ordering& labels);

struct DualTransfer {
  matroids::Matroid dual;
  // m + 1 - sigma.
  Ordering order;
  ReductionCertificate certificate;
};

// (m+1 choose 2) - (m + 1)(m - r(E)).
Integer dual_constant(std::int64_t m, std::int64_t rank);

DualTransfer dual_transfer(const matroids::Matroid& m, const Ordering& sigma);

// G (isolated vertices stripped) plus an apex joined to every vertex. Edges
// of G keep labels 0..|E|-1 with cost 1; the star edge of kept vertex i has
// label |E| + i and cost k = 9|E|^2 + 2.
struct ApexReduction {
  Graph apex_graph;
  std::vector<std::int64_t> costs;
  std::int64_t k = 0;
  // k * (1 + ... + n'), n' the number of kept vertices.
  Integer offset;
  std::vector<int> kept_vertices;
  std::vector<int> isolated_vertices;
  int original_vertices = 0;
  std::size_t original_edges = 0;
};

// Throws std::invalid_argument on loops or when no edges remain.
ApexReduction mlvc_to_weighted_graphic(const Graph& graph);

// Vertex labeling of the original graph read off an ordering of the apex
// graph's edges: kept vertices by the rank of the prefix ending at their star
// edge, isolated vertices last. Empty when two star edges share a rank.
std::optional<Ordering> recover_labeling(const ApexReduction& reduction,
                                         const Ordering& edge_order);

// Checks the optimum transfer given an optimal weighted ordering of (H, c):
// source = MLVC of the recovered labeling, target = weighted optimum.
ReductionCertificate apex_certificate(const Graph& graph, const ApexReduction& reduction,
                                      const solve::Solution& weighted_optimum);

struct WeightedToUnweighted {
  matroids::Duplication expanded;
  // sigma with every element followed by its copies.
  Ordering order;
  ReductionCertificate certificate;
};

WeightedToUnweighted weighted_to_unweighted(const matroids::Matroid& m,
                                            std::span<const std::int64_t> costs,
                                            const Ordering& sigma);

// MLA(G, pi) = 2 MLVC(G, pi) - k (n+1 choose 2) on a k-regular G.
ReductionCertificate regular_shift(const Graph& graph, const Ordering& labels);

}  // namespace ordolab::reductions
