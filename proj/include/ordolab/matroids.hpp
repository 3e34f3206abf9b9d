#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ordolab/core.hpp"

namespace ordolab::matroids {

// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> values);

  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Rank of the column submatrix. prime == 0 means over the rationals
// (fraction-free Bareiss elimination); otherwise over GF(prime).
std::int64_t column_rank(const IntMatrix& matrix, const std::vector<int>& columns,
                         std::uint64_t prime = 0);

// Type-erased matroid given by its rank oracle. Copies share the oracle.
class Matroid {
 public:
  class Impl {
   public:
    virtual ~Impl() = default;
    virtual std::size_t size() const = 0;
    virtual std::int64_t rank(const Subset& subset) const = 0;
    virtual std::string describe() const = 0;
    virtual const Graph* graph() const { return nullptr; }
  };

  explicit Matroid(std::shared_ptr<const Impl> impl);

  std::size_t size() const { return impl_->size(); }
  // Throws std::out_of_range when the subset leaves the ground set.
  std::int64_t rank(const Subset& subset) const;
  std::int64_t full_rank() const { return full_rank_; }
  std::string describe() const { return impl_->describe(); }
  // The underlying graph for graphic matroids, else nullptr.
  const Graph* graph() const { return impl_->graph(); }

  bool is_independent(const Subset& subset) const {
    return rank(subset) == static_cast<std::int64_t>(subset.count());
  }
  bool is_basis(const Subset& subset) const {
    return is_independent(subset) && static_cast<std::int64_t>(subset.count()) == full_rank_;
  }

  SetFunction rank_function() const;

 private:
  std::shared_ptr<const Impl> impl_;
  std::int64_t full_rank_ = 0;
};

// Cycle matroid: r(S) = n - #components of (V, S). Loops have rank 0.
Matroid graphic(Graph graph);
// U_k^m: r(S) = min(|S|, k).
Matroid uniform(std::size_t m, std::size_t k);
// Column matroid of an integer matrix.
Matroid vector(IntMatrix matrix, std::uint64_t prime = 0);
// r*(X) = |X| - r(E) + r(E - X).
Matroid dual(const Matroid& base);

struct Duplication {
  Matroid matroid;
  // origin[i] is the original element that expanded element i copies.
  std::vector<int> origin;
};

// Adds cost(e) - 1 parallel copies of every element. Copies of e occupy a
// contiguous block of labels, the first of which plays e itself.
Duplication duplicate(const Matroid& base, std::span<const std::int64_t> costs);

std::int64_t rank(const Matroid& m, const Subset& subset);
std::int64_t corank(const Matroid& m, const Subset& subset);

// Total weight of edges with exactly one endpoint in S (over vertices).
SetFunction cut_function(const Graph& graph);

// C(B, e): the unique circuit in B + e. Throws std::invalid_argument when B
// is not a basis or e is in B.
Subset fundamental_circuit(const Matroid& m, const Subset& basis, int element);

// Same circuit for a graphic matroid via the tree path between e's endpoints.
Subset graphic_fundamental_circuit(const Graph& graph, const Subset& basis, int edge);

// Decides whether M is isomorphic to U_k^m (k = r(E)) by comparing its exact
// MLOP optimum to the uniform closed form. Throws when the ground exceeds the
// exact-solver cap.
bool is_uniform_via_mlop(const Matroid& m);

}  // namespace ordolab::matroids
