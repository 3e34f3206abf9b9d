#include "ordolab/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace ordolab {

GroundSet::GroundSet(std::size_t size) : size_(size) {
  if (size == 0) throw std::invalid_argument("ground set must be nonempty");
  if (size > Subset::kCapacity) {
    throw std::invalid_argument("ground set of " + std::to_string(size) +
                                " elements exceeds capacity " +
                                std::to_string(Subset::kCapacity));
  }
}

Ordering Ordering::from_sequence(std::vector<int> sequence) {
  const std::size_t m = sequence.size();
  std::vector<int> positions(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const int e = sequence[i];
    if (e < 0 || static_cast<std::size_t>(e) >= m) {
      throw std::invalid_argument("ordering element " + std::to_string(e) +
                                  " outside 0.." + std::to_string(m) + "-1");
    }
    if (positions[static_cast<std::size_t>(e)] != 0) {
      throw std::invalid_argument("ordering repeats element " + std::to_string(e));
    }
    positions[static_cast<std::size_t>(e)] = static_cast<int>(i) + 1;
  }
  Ordering o;
  o.sequence_ = std::move(sequence);
  o.positions_ = std::move(positions);
  return o;
}

Ordering Ordering::from_positions(const std::vector<int>& positions) {
  const std::size_t m = positions.size();
  std::vector<int> sequence(m, -1);
  for (std::size_t e = 0; e < m; ++e) {
    const int p = positions[e];
    if (p < 1 || static_cast<std::size_t>(p) > m) {
      throw std::invalid_argument("position " + std::to_string(p) + " outside 1.." +
                                  std::to_string(m));
    }
    if (sequence[static_cast<std::size_t>(p - 1)] != -1) {
      throw std::invalid_argument("position " + std::to_string(p) + " used twice");
    }
    sequence[static_cast<std::size_t>(p - 1)] = static_cast<int>(e);
  }
  return from_sequence(std::move(sequence));
}

Ordering Ordering::identity(std::size_t size) {
  std::vector<int> seq(size);
  for (std::size_t i = 0; i < size; ++i) seq[i] = static_cast<int>(i);
  return from_sequence(std::move(seq));
}

Subset Ordering::prefix(std::size_t count) const {
  Subset s;
  for (std::size_t i = 0; i < count && i < sequence_.size(); ++i) s.insert(sequence_[i]);
  return s;
}

Ordering Ordering::reversed() const {
  std::vector<int> seq(sequence_.rbegin(), sequence_.rend());
  return from_sequence(std::move(seq));
}

SetFunction::SetFunction(std::size_t size, Eval eval) : size_(size), eval_(std::move(eval)) {
  if (size > Subset::kCapacity) {
    throw std::invalid_argument("set function ground exceeds capacity");
  }
  if (!eval_) throw std::invalid_argument("set function needs an evaluator");
}

SetFunction modular_function(std::size_t size) {
  return SetFunction(size, [](const Subset& s) { return Rational(static_cast<long>(s.count())); });
}

SetFunction zero_function(std::size_t size) {
  return SetFunction(size, [](const Subset&) { return Rational(0); });
}

std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kMlop: return "mlop";
    case ObjectiveKind::kWeightedMlop: return "weighted-mlop";
    case ObjectiveKind::kMlvc: return "mlvc";
    case ObjectiveKind::kMsvc: return "msvc";
    case ObjectiveKind::kMla: return "mla";
  }
  return "unknown";
}

namespace {

void require_same_ground(std::size_t f_size, const Ordering& order) {
  if (f_size != order.size()) {
    throw std::invalid_argument("ordering over " + std::to_string(order.size()) +
                                " elements does not match ground of " +
                                std::to_string(f_size));
  }
}

void require_vertex_ordering(const Graph& graph, const Ordering& labels) {
  if (static_cast<std::size_t>(graph.num_vertices()) != labels.size()) {
    throw std::invalid_argument("labeling covers " + std::to_string(labels.size()) +
                                " vertices but graph has " +
                                std::to_string(graph.num_vertices()));
  }
}

}  // namespace

Rational mlop_objective(const SetFunction& f, const Ordering& order) {
  require_same_ground(f.size(), order);
  Rational total = 0;
  Subset prefix;
  for (int e : order.sequence()) {
    prefix.insert(e);
    total += f(prefix);
  }
  return total;
}

Rational weighted_mlop_objective(const SetFunction& f, std::span<const std::int64_t> costs,
                                 const Ordering& order) {
  require_same_ground(f.size(), order);
  if (costs.size() != f.size()) throw std::invalid_argument("one cost per element required");
  for (std::int64_t c : costs) {
    if (c <= 0) throw std::invalid_argument("costs must be positive integers");
  }
  Rational total = 0;
  Subset prefix;
  for (int e : order.sequence()) {
    prefix.insert(e);
    total += f(prefix) * Rational(static_cast<long>(costs[static_cast<std::size_t>(e)]));
  }
  return total;
}

std::int64_t mlvc_objective(const Graph& graph, const Ordering& labels) {
  require_vertex_ordering(graph, labels);
  std::int64_t total = 0;
  for (const Edge& e : graph.edges()) total += std::max(labels.position(e.u), labels.position(e.v));
  return total;
}

std::int64_t msvc_objective(const Graph& graph, const Ordering& labels) {
  require_vertex_ordering(graph, labels);
  std::int64_t total = 0;
  for (const Edge& e : graph.edges()) total += std::min(labels.position(e.u), labels.position(e.v));
  return total;
}

std::int64_t mla_objective(const Graph& graph, const Ordering& labels) {
  require_vertex_ordering(graph, labels);
  std::int64_t total = 0;
  for (const Edge& e : graph.edges()) total += std::abs(labels.position(e.u) - labels.position(e.v));
  return total;
}

}  // namespace ordolab
