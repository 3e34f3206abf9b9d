#include "ordolab/matroids.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "ordolab/solve.hpp"

namespace ordolab::matroids {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> values) {
  rows = values.size();
  cols = rows == 0 ? 0 : values.begin()->size();
  data.reserve(rows * cols);
  for (const auto& row : values) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
}

namespace {

std::int64_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  Integer prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Integer v = a[r][k] * a[rank][c] - a[r][c] * a[rank][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        a[r][k] = std::move(v);
      }
      a[r][c] = 0;
    }
    prev_pivot = a[rank][c];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::int64_t modular_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t factor = mul_mod(a[r][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] = (a[r][k] + p - mul_mod(factor, a[rank][k], p)) % p;
      }
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_within(const Subset& subset, std::size_t size) {
  if (subset.extent() > size) {
    throw std::out_of_range("subset element " + std::to_string(subset.extent() - 1) +
                            " outside ground of " + std::to_string(size));
  }
}

class GraphicImpl final : public Matroid::Impl {
 public:
  explicit GraphicImpl(Graph g) : graph_(std::move(g)) {}
  std::size_t size() const override { return graph_.num_edges(); }
  std::int64_t rank(const Subset& subset) const override {
    // Union-find rebuilt per query; the number of successful unions is the rank.
    std::vector<int> parent(static_cast<std::size_t>(graph_.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        const int up = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        parent[static_cast<std::size_t>(x)] = up;
        x = up;
      }
      return x;
    };
    std::int64_t r = 0;
    subset.for_each([&](int e) {
      const Edge& edge = graph_.edge(static_cast<std::size_t>(e));
      const int a = find(edge.u);
      const int b = find(edge.v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        ++r;
      }
    });
    return r;
  }
  std::string describe() const override {
    return "graphic(n=" + std::to_string(graph_.num_vertices()) +
           ", m=" + std::to_string(graph_.num_edges()) + ")";
  }
  const Graph* graph() const override { return &graph_; }

 private:
  Graph graph_;
};

class UniformImpl final : public Matroid::Impl {
 public:
  UniformImpl(std::size_t m, std::size_t k) : m_(m), k_(k) {}
  std::size_t size() const override { return m_; }
  std::int64_t rank(const Subset& subset) const override {
    return static_cast<std::int64_t>(std::min(subset.count(), k_));
  }
  std::string describe() const override {
    return "uniform(k=" + std::to_string(k_) + ", m=" + std::to_string(m_) + ")";
  }

 private:
  std::size_t m_;
  std::size_t k_;
};

class VectorImpl final : public Matroid::Impl {
 public:
  VectorImpl(IntMatrix a, std::uint64_t prime) : a_(std::move(a)), prime_(prime) {}
  std::size_t size() const override { return a_.cols; }
  std::int64_t rank(const Subset& subset) const override {
    return column_rank(a_, subset.elements(), prime_);
  }
  std::string describe() const override {
    std::string field = prime_ == 0 ? "Q" : "GF(" + std::to_string(prime_) + ")";
    return "vector(" + std::to_string(a_.rows) + "x" + std::to_string(a_.cols) + " over " +
           field + ")";
  }

 private:
  IntMatrix a_;
  std::uint64_t prime_;
};

class DualImpl final : public Matroid::Impl {
 public:
  explicit DualImpl(Matroid base) : base_(std::move(base)), full_(Subset::full(base_.size())) {}
  std::size_t size() const override { return base_.size(); }
  std::int64_t rank(const Subset& subset) const override {
    return static_cast<std::int64_t>(subset.count()) - base_.full_rank() +
           base_.rank(full_ - subset);
  }
  std::string describe() const override { return "dual(" + base_.describe() + ")"; }

 private:
  Matroid base_;
  Subset full_;
};

class ProjectedImpl final : public Matroid::Impl {
 public:
  ProjectedImpl(Matroid base, std::vector<int> origin)
      : base_(std::move(base)), origin_(std::move(origin)) {}
  std::size_t size() const override { return origin_.size(); }
  std::int64_t rank(const Subset& subset) const override {
    Subset projected;
    subset.for_each([&](int e) { projected.insert(origin_[static_cast<std::size_t>(e)]); });
    return base_.rank(projected);
  }
  std::string describe() const override {
    return "parallel-extension(" + base_.describe() + ", m=" + std::to_string(origin_.size()) +
           ")";
  }

 private:
  Matroid base_;
  std::vector<int> origin_;
};

}  // namespace

std::int64_t column_rank(const IntMatrix& matrix, const std::vector<int>& columns,
                         std::uint64_t prime) {
  if (columns.empty() || matrix.rows == 0) return 0;
  for (int c : columns) {
    if (c < 0 || static_cast<std::size_t>(c) >= matrix.cols) {
      throw std::out_of_range("column " + std::to_string(c) + " out of range");
    }
  }
  if (prime == 0) {
    std::vector<std::vector<Integer>> a(matrix.rows, std::vector<Integer>(columns.size()));
    for (std::size_t r = 0; r < matrix.rows; ++r) {
      for (std::size_t j = 0; j < columns.size(); ++j) {
        a[r][j] = Integer(static_cast<long>(matrix.at(r, static_cast<std::size_t>(columns[j]))));
      }
    }
    return bareiss_rank(std::move(a));
  }
  std::vector<std::vector<std::uint64_t>> a(matrix.rows,
                                            std::vector<std::uint64_t>(columns.size()));
  const auto p = static_cast<std::int64_t>(prime);
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      std::int64_t v = matrix.at(r, static_cast<std::size_t>(columns[j])) % p;
      if (v < 0) v += p;
      a[r][j] = static_cast<std::uint64_t>(v);
    }
  }
  return modular_rank(std::move(a), prime);
}

Matroid::Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
  if (!impl_) throw std::invalid_argument("null matroid oracle");
  if (impl_->size() > Subset::kCapacity) {
    throw std::invalid_argument("matroid ground exceeds subset capacity");
  }
  full_rank_ = impl_->rank(Subset::full(impl_->size()));
}

std::int64_t Matroid::rank(const Subset& subset) const {
  check_within(subset, size());
  return impl_->rank(subset);
}

SetFunction Matroid::rank_function() const {
  auto impl = impl_;
  return SetFunction(size(), [impl](const Subset& s) {
    return Rational(static_cast<long>(impl->rank(s)));
  });
}

Matroid graphic(Graph graph) { return Matroid(std::make_shared<GraphicImpl>(std::move(graph))); }

Matroid uniform(std::size_t m, std::size_t k) {
  if (k > m) throw std::invalid_argument("uniform matroid needs k <= m");
  return Matroid(std::make_shared<UniformImpl>(m, k));
}

Matroid vector(IntMatrix matrix, std::uint64_t prime) {
  if (matrix.data.size() != matrix.rows * matrix.cols) {
    throw std::invalid_argument("matrix data does not match its shape");
  }
  if (prime != 0 && !is_prime(prime)) {
    throw std::invalid_argument("GF(p) rank needs a prime p");
  }
  if (prime > (std::uint64_t{1} << 62)) throw std::invalid_argument("prime too large");
  return Matroid(std::make_shared<VectorImpl>(std::move(matrix), prime));
}

Matroid dual(const Matroid& base) { return Matroid(std::make_shared<DualImpl>(base)); }

Duplication duplicate(const Matroid& base, std::span<const std::int64_t> costs) {
  if (costs.size() != base.size()) throw std::invalid_argument("one cost per element required");
  std::vector<int> origin;
  for (std::size_t e = 0; e < costs.size(); ++e) {
    if (costs[e] <= 0) {
      throw std::invalid_argument("cost of element " + std::to_string(e) + " must be positive");
    }
    for (std::int64_t copy = 0; copy < costs[e]; ++copy) {
      origin.push_back(static_cast<int>(e));
      if (origin.size() > Subset::kCapacity) {
        throw std::invalid_argument("duplicated ground exceeds subset capacity");
      }
    }
  }
  auto expanded = Matroid(std::make_shared<ProjectedImpl>(base, origin));
  return Duplication{std::move(expanded), std::move(origin)};
}

std::int64_t rank(const Matroid& m, const Subset& subset) { return m.rank(subset); }

std::int64_t corank(const Matroid& m, const Subset& subset) {
  check_within(subset, m.size());
  const Subset full = Subset::full(m.size());
  return static_cast<std::int64_t>(subset.count()) - m.full_rank() + m.rank(full - subset);
}

SetFunction cut_function(const Graph& graph) {
  return SetFunction(static_cast<std::size_t>(graph.num_vertices()),
                     [graph](const Subset& s) {
                       Rational total = 0;
                       for (const Edge& e : graph.edges()) {
                         if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
                       }
                       return total;
                     });
}

Subset fundamental_circuit(const Matroid& m, const Subset& basis, int element) {
  if (!m.is_basis(basis)) throw std::invalid_argument("B is not a basis");
  if (element < 0 || static_cast<std::size_t>(element) >= m.size()) {
    throw std::out_of_range("element out of range");
  }
  if (basis.contains(element)) throw std::invalid_argument("element already in the basis");
  // b lies on C(B, e) exactly when B - b + e is again a basis.
  Subset circuit{element};
  Subset with = basis;
  with.insert(element);
  basis.for_each([&](int b) {
    Subset swapped = with;
    swapped.erase(b);
    if (m.rank(swapped) == m.full_rank()) circuit.insert(b);
  });
  return circuit;
}

Subset graphic_fundamental_circuit(const Graph& graph, const Subset& basis, int edge) {
  if (edge < 0 || static_cast<std::size_t>(edge) >= graph.num_edges()) {
    throw std::out_of_range("edge out of range");
  }
  if (basis.contains(edge)) throw std::invalid_argument("edge already in the basis");
  if (!graphic(graph).is_basis(basis)) throw std::invalid_argument("B is not a spanning forest");
  const auto n = static_cast<std::size_t>(graph.num_vertices());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  basis.for_each([&](int e) {
    const Edge& ed = graph.edge(static_cast<std::size_t>(e));
    adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
    adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
  });
  const Edge& target = graph.edge(static_cast<std::size_t>(edge));
  Subset circuit{edge};
  if (target.u == target.v) return circuit;
  std::vector<int> via(n, -2);
  std::vector<int> from(n, -1);
  std::queue<int> queue;
  queue.push(target.u);
  via[static_cast<std::size_t>(target.u)] = -1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (const auto& [y, e] : adj[static_cast<std::size_t>(x)]) {
      if (via[static_cast<std::size_t>(y)] != -2) continue;
      via[static_cast<std::size_t>(y)] = e;
      from[static_cast<std::size_t>(y)] = x;
      queue.push(y);
    }
  }
  for (int x = target.v; x != target.u; x = from[static_cast<std::size_t>(x)]) {
    circuit.insert(via[static_cast<std::size_t>(x)]);
  }
  return circuit;
}

bool is_uniform_via_mlop(const Matroid& m) {
  const auto optimum = solve::exact_mlop_dp(m.rank_function());
  const Integer closed = solve::uniform_closed_form(m.full_rank(), static_cast<std::int64_t>(m.size()));
  return optimum.value == Rational(closed);
}

}  // namespace ordolab::matroids
