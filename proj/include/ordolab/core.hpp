#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordolab/graph.hpp"
#include "ordolab/rational.hpp"
#include "ordolab/subset.hpp"

namespace ordolab {

// Raised when an instance exceeds a solver's configured size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Ground set {0, ..., size-1}.
class GroundSet {
 public:
  explicit GroundSet(std::size_t size);
  std::size_t size() const { return size_; }
  Subset full() const { return Subset::full(size_); }
  bool contains(int element) const {
    return element >= 0 && static_cast<std::size_t>(element) < size_;
  }
  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::size_t size_;
};

// Bijection from elements to positions 1..m, stored both ways.
class Ordering {
 public:
  Ordering() = default;

  // sequence[i] is the element at position i+1.
  static Ordering from_sequence(std::vector<int> sequence);
  // positions[e] is the 1-based position of element e.
  static Ordering from_positions(const std::vector<int>& positions);
  static Ordering identity(std::size_t size);

  std::size_t size() const { return sequence_.size(); }
  const std::vector<int>& sequence() const { return sequence_; }
  // Element at 1-based position.
  int at(std::size_t position) const { return sequence_.at(position - 1); }
  // 1-based position of an element.
  int position(int element) const { return positions_.at(static_cast<std::size_t>(element)); }
  std::vector<int> positions() const { return positions_; }

  // The first `count` elements.
  Subset prefix(std::size_t count) const;

  // position -> m + 1 - position.
  Ordering reversed() const;

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<int> sequence_;
  std::vector<int> positions_;
};

// Exact set-function oracle f: 2^E -> Q. Oracles must be pure.
class SetFunction {
 public:
  using Eval = std::function<Rational(const Subset&)>;

  SetFunction() = default;
  SetFunction(std::size_t size, Eval eval);

  std::size_t size() const { return size_; }
  Subset full() const { return Subset::full(size_); }
  Rational operator()(const Subset& subset) const { return eval_(subset); }

 private:
  std::size_t size_ = 0;
  Eval eval_;
};

SetFunction modular_function(std::size_t size);
SetFunction zero_function(std::size_t size);

enum class ObjectiveKind { kMlop, kWeightedMlop, kMlvc, kMsvc, kMla };

std::string_view to_string(ObjectiveKind kind);

struct ObjectiveValue {
  Rational value;
  Ordering ordering;
  ObjectiveKind kind = ObjectiveKind::kMlop;
};

// Sum of f over the m prefix sets of the ordering.
Rational mlop_objective(const SetFunction& f, const Ordering& order);

// Sum over positions i of f(prefix_i) * cost(element at i). Costs must be
// strictly positive.
Rational weighted_mlop_objective(const SetFunction& f,
                                 std::span<const std::int64_t> costs,
                                 const Ordering& order);

// Vertex-ordering objectives over the edges of a graph. Edge weights are
// ignored; every edge counts once.
std::int64_t mlvc_objective(const Graph& graph, const Ordering& labels);
std::int64_t msvc_objective(const Graph& graph, const Ordering& labels);
std::int64_t mla_objective(const Graph& graph, const Ordering& labels);

}  // namespace ordolab
