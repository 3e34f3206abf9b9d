#include "ordolab/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ordolab::reductions {

Integer mlvc_msvc_constant(int n, std::size_t complement_edges) {
  const Integer nn(n);
  return (nn * nn * nn - nn) / 3 - (nn + 1) * Integer(static_cast<unsigned long>(complement_edges));
}

MlvcMsvcShift mlvc_msvc_shift(const Graph& graph, const Ordering& labels) {
  if (!graph.is_simple()) throw std::invalid_argument("MLVC/MSVC shift needs a simple graph");
  MlvcMsvcShift out{graph.complement(), labels.reversed(), {}};
  out.certificate.relation = "MLVC(G, pi) = MSVC(complement, n + 1 - pi) + shift";
  out.certificate.source = Rational(static_cast<long>(mlvc_objective(graph, labels)));
  out.certificate.target = Rational(static_cast<long>(msvc_objective(out.complement, out.labels)));
  out.certificate.shift =
      Rational(mlvc_msvc_constant(graph.num_vertices(), out.complement.num_edges()));
  return out;
}

Integer dual_constant(std::int64_t m, std::int64_t rank) {
  const Integer mm(static_cast<long>(m));
  return mm * (mm + 1) / 2 - (mm + 1) * (mm - Integer(static_cast<long>(rank)));
}

DualTransfer dual_transfer(const matroids::Matroid& m, const Ordering& sigma) {
  DualTransfer out{matroids::dual(m), sigma.reversed(), {}};
  out.certificate.relation = "sum r(prefix sigma) = sum r*(prefix sigma*) + shift";
  out.certificate.source = mlop_objective(m.rank_function(), sigma);
  out.certificate.target = mlop_objective(out.dual.rank_function(), out.order);
  out.certificate.shift =
      Rational(dual_constant(static_cast<std::int64_t>(m.size()), m.full_rank()));
  return out;
}

ApexReduction mlvc_to_weighted_graphic(const Graph& graph) {
  for (const Edge& e : graph.edges()) {
    if (e.u == e.v) throw std::invalid_argument("apex reduction does not accept loops");
  }
  if (graph.num_edges() == 0) {
    throw std::invalid_argument("graph has no edges after stripping isolated vertices");
  }
  ApexReduction out;
  out.original_vertices = graph.num_vertices();
  out.original_edges = graph.num_edges();
  out.isolated_vertices = graph.isolated_vertices();
  std::vector<int> renumber(static_cast<std::size_t>(graph.num_vertices()), -1);
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (!std::binary_search(out.isolated_vertices.begin(), out.isolated_vertices.end(), v)) {
      renumber[static_cast<std::size_t>(v)] = static_cast<int>(out.kept_vertices.size());
      out.kept_vertices.push_back(v);
    }
  }
  const auto n = static_cast<int>(out.kept_vertices.size());
  const auto m = static_cast<std::int64_t>(graph.num_edges());
  out.k = 9 * m * m + 2;
  Graph h(n + 1);
  for (const Edge& e : graph.edges()) {
    h.add_edge(renumber[static_cast<std::size_t>(e.u)], renumber[static_cast<std::size_t>(e.v)]);
    out.costs.push_back(1);
  }
  for (int v = 0; v < n; ++v) {
    h.add_edge(n, v);
    out.costs.push_back(out.k);
  }
  out.apex_graph = std::move(h);
  out.offset = Integer(static_cast<long>(out.k)) * Integer(n) * Integer(n + 1) / 2;
  return out;
}

std::optional<Ordering> recover_labeling(const ApexReduction& reduction,
                                         const Ordering& edge_order) {
  const Graph& h = reduction.apex_graph;
  if (edge_order.size() != h.num_edges()) {
    throw std::invalid_argument("edge ordering does not cover the apex graph");
  }
  const matroids::Matroid mat = matroids::graphic(h);
  const std::size_t m = reduction.original_edges;
  const std::size_t n = reduction.kept_vertices.size();
  std::vector<std::pair<std::int64_t, int>> star_ranks;
  for (std::size_t v = 0; v < n; ++v) {
    const int label = static_cast<int>(m + v);
    const auto pos = static_cast<std::size_t>(edge_order.position(label));
    star_ranks.emplace_back(mat.rank(edge_order.prefix(pos)), static_cast<int>(v));
  }
  std::sort(star_ranks.begin(), star_ranks.end());
  for (std::size_t i = 1; i < star_ranks.size(); ++i) {
    if (star_ranks[i].first == star_ranks[i - 1].first) return std::nullopt;
  }
  std::vector<int> seq;
  for (const auto& [rank, v] : star_ranks) {
    seq.push_back(reduction.kept_vertices[static_cast<std::size_t>(v)]);
  }
  seq.insert(seq.end(), reduction.isolated_vertices.begin(), reduction.isolated_vertices.end());
  return Ordering::from_sequence(std::move(seq));
}

ReductionCertificate apex_certificate(const Graph& graph, const ApexReduction& reduction,
                                      const solve::Solution& weighted_optimum) {
  ReductionCertificate cert;
  cert.relation = "MLVC(G, recovered pi) = weighted optimum of (H, c) - k (1 + ... + n)";
  cert.target = weighted_optimum.value;
  cert.shift = -Rational(reduction.offset);
  const std::optional<Ordering> labels = recover_labeling(reduction, weighted_optimum.ordering);
  if (!labels) {
    cert.relation += " [ordering is not good]";
    cert.source = -1;
    return cert;
  }
  cert.source = Rational(static_cast<long>(mlvc_objective(graph, *labels)));
  return cert;
}

WeightedToUnweighted weighted_to_unweighted(const matroids::Matroid& m,
                                            std::span<const std::int64_t> costs,
                                            const Ordering& sigma) {
  matroids::Duplication dup = matroids::duplicate(m, costs);
  std::vector<std::vector<int>> copies(m.size());
  for (std::size_t i = 0; i < dup.origin.size(); ++i) {
    copies[static_cast<std::size_t>(dup.origin[i])].push_back(static_cast<int>(i));
  }
  std::vector<int> seq;
  for (int e : sigma.sequence()) {
    const auto& c = copies[static_cast<std::size_t>(e)];
    seq.insert(seq.end(), c.begin(), c.end());
  }
  WeightedToUnweighted out{std::move(dup), Ordering::from_sequence(std::move(seq)), {}};
  out.certificate.relation = "weighted MLOP(M, c, sigma) = MLOP(N, expanded sigma)";
  out.certificate.source = weighted_mlop_objective(m.rank_function(), costs, sigma);
  out.certificate.target = mlop_objective(out.expanded.matroid.rank_function(), out.order);
  return out;
}

ReductionCertificate regular_shift(const Graph& graph, const Ordering& labels) {
  const std::optional<int> degree = graph.regular_degree();
  if (!degree) throw std::invalid_argument("regular shift needs a regular graph");
  const long n = graph.num_vertices();
  ReductionCertificate cert;
  cert.relation = "MLA(G, pi) = 2 MLVC(G, pi) - k (n+1 choose 2)";
  cert.source = Rational(static_cast<long>(mla_objective(graph, labels)));
  cert.target = Rational(static_cast<long>(mlvc_objective(graph, labels)));
  cert.scale = 2;
  cert.shift = -Rational(static_cast<long>(*degree) * (n + 1) * n / 2);
  return cert;
}

}  // namespace ordolab::reductions
