#include "ordolab/solve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace ordolab::solve {

namespace {

void require_cap(std::size_t m, std::size_t cap) {
  const std::size_t limit = std::min<std::size_t>(cap, 30);
  if (m > limit) {
    throw CapacityError("ground of " + std::to_string(m) +
                        " elements exceeds the exact-solver cap of " + std::to_string(limit));
  }
}

// Walks the argmin table back from the full set; `last[S]` is the final
// element of an optimal ordering of S.
Ordering reconstruct(const std::vector<std::uint8_t>& last, std::size_t m) {
  std::vector<int> seq(m);
  std::uint64_t s = (std::uint64_t{1} << m) - 1;
  for (std::size_t i = m; i > 0; --i) {
    const int e = last[s];
    seq[i - 1] = e;
    s &= ~(std::uint64_t{1} << e);
  }
  return Ordering::from_sequence(std::move(seq));
}

}  // namespace

Solution exact_mlop_dp(const SetFunction& f, std::size_t cap) {
  const std::size_t m = f.size();
  require_cap(m, cap);
  const std::uint64_t states = std::uint64_t{1} << m;
  std::vector<Rational> best(states);
  std::vector<std::uint8_t> last(states, 0);
  for (std::uint64_t s = 1; s < states; ++s) {
    std::uint64_t rest = s;
    bool first = true;
    while (rest != 0) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      const Rational& cand = best[s & ~(std::uint64_t{1} << e)];
      if (first || cand < best[s]) {
        best[s] = cand;
        last[s] = static_cast<std::uint8_t>(e);
        first = false;
      }
    }
    best[s] += f(Subset::from_mask(s));
  }
  return Solution{best[states - 1], reconstruct(last, m)};
}

Solution exact_weighted_mlop_dp(const SetFunction& f, std::span<const std::int64_t> costs,
                                std::size_t cap) {
  const std::size_t m = f.size();
  require_cap(m, cap);
  if (costs.size() != m) throw std::invalid_argument("one cost per element required");
  for (std::int64_t c : costs) {
    if (c <= 0) throw std::invalid_argument("costs must be positive integers");
  }
  const std::uint64_t states = std::uint64_t{1} << m;
  std::vector<Rational> best(states);
  std::vector<std::uint8_t> last(states, 0);
  for (std::uint64_t s = 1; s < states; ++s) {
    const Rational value = f(Subset::from_mask(s));
    std::uint64_t rest = s;
    bool first = true;
    while (rest != 0) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      Rational cand = best[s & ~(std::uint64_t{1} << e)] +
                      value * Rational(static_cast<long>(costs[static_cast<std::size_t>(e)]));
      if (first || cand < best[s]) {
        best[s] = std::move(cand);
        last[s] = static_cast<std::uint8_t>(e);
        first = false;
      }
    }
  }
  return Solution{best[states - 1], reconstruct(last, m)};
}

Integer uniform_closed_form(std::int64_t k, std::int64_t m) {
  if (k < 0 || k > m) throw std::invalid_argument("uniform closed form needs 0 <= k <= m");
  const Integer kk(static_cast<long>(k));
  const Integer mm(static_cast<long>(m));
  return kk * (kk + 1) / 2 + kk * (mm - kk);
}

namespace {

void require_chain(const SetFunction& f, const partition::PrincipalPartition& pp) {
  if (pp.chain.size() < 2 || !pp.chain.front().empty() || pp.chain.back() != f.full()) {
    throw std::invalid_argument("partition chain does not run from the empty set to E");
  }
  for (std::size_t i = 1; i < pp.chain.size(); ++i) {
    if (!pp.chain[i - 1].is_subset_of(pp.chain[i]) || pp.chain[i - 1] == pp.chain[i]) {
      throw std::invalid_argument("partition chain is not strictly nested");
    }
  }
}

Rational max_singleton(const SetFunction& f) {
  Rational kappa = 0;
  for (std::size_t e = 0; e < f.size(); ++e) {
    Rational v = f(Subset{static_cast<int>(e)});
    if (v > kappa) kappa = std::move(v);
  }
  return kappa;
}

}  // namespace

Rational pp_lower_bound(const SetFunction& f, const partition::PrincipalPartition& pp) {
  require_chain(f, pp);
  const Rational total = f(f.full());
  Rational cross = 0;
  for (std::size_t i = 1; i < pp.chain.size(); ++i) {
    const Rational f_prev = f(pp.chain[i - 1]);
    const Rational f_cur = f(pp.chain[i]);
    cross += f_cur * Rational(static_cast<long>(pp.chain[i - 1].count())) -
             f_prev * Rational(static_cast<long>(pp.chain[i].count()));
  }
  const Rational m(static_cast<long>(f.size()));
  return (m + 1) * total / 2 - cross / 2;
}

Rational pp_upper_bound(const SetFunction& f, const partition::PrincipalPartition& pp) {
  require_chain(f, pp);
  const Rational total = f(f.full());
  if (total == 0) return Rational(0);
  const Rational kappa = max_singleton(f);
  const Rational m(static_cast<long>(f.size()));
  Rational value = total * m - total * total / (2 * kappa) + total / 2;
  for (std::size_t i = 1; i < pp.chain.size(); ++i) {
    const Rational f_prev = f(pp.chain[i - 1]);
    const Rational f_cur = f(pp.chain[i]);
    const Rational width(
        static_cast<long>(pp.chain[i].count() - pp.chain[i - 1].count()));
    value -= (total - f_cur) * width;
    value += f_prev * (f_cur - f_prev) / kappa;
  }
  return value;
}

Approximation approx_monotone_mlop(const SetFunction& f, const sfm::SfmOptions& options) {
  const std::size_t m = f.size();
  const partition::ZeroSetContraction zero = partition::zero_set_contract(f);
  Approximation out;
  out.zero_set = zero.zero_set;
  std::vector<int> seq = zero.zero_set.elements();
  if (zero.labels.empty()) {
    out.ordering = Ordering::from_sequence(std::move(seq));
    out.value = 0;
    out.certificate = BoundCertificate{Rational(0), Rational(0), Rational(1), true};
    out.partition.chain = {Subset(), f.full()};
    out.partition.trivial = true;
    return out;
  }
  const SetFunction& g = zero.contracted;
  const partition::PrincipalPartition pp = partition::compute_principal_partition(g, options);
  auto lift = [&](const Subset& s) {
    Subset lifted = zero.zero_set;
    s.for_each([&](int e) { lifted.insert(zero.labels[static_cast<std::size_t>(e)]); });
    return lifted;
  };
  for (std::size_t i = 1; i < pp.chain.size(); ++i) {
    std::vector<std::pair<Rational, int>> cell;
    (pp.chain[i] - pp.chain[i - 1]).for_each([&](int e) {
      const int original = zero.labels[static_cast<std::size_t>(e)];
      cell.emplace_back(f(Subset{original}), original);
    });
    std::sort(cell.begin(), cell.end());
    for (const auto& entry : cell) seq.push_back(entry.second);
  }
  out.ordering = Ordering::from_sequence(std::move(seq));
  out.value = mlop_objective(f, out.ordering);
  out.partition.critical_values = pp.critical_values;
  for (const Subset& s : pp.chain) out.partition.chain.push_back(lift(s));
  const partition::LinearityStats stats = partition::linearity_stats(f);
  out.certificate.lower = pp_lower_bound(g, pp);
  out.certificate.upper = pp_upper_bound(g, pp);
  out.certificate.guarantee =
      Rational(2) - (1 + stats.linearity) / Rational(static_cast<long>(m + 1));
  return out;
}

namespace {

Subset circuit_of(const matroids::Matroid& m, const Subset& basis, int e) {
  if (const Graph* g = m.graph(); g != nullptr) {
    return matroids::graphic_fundamental_circuit(*g, basis, e);
  }
  return matroids::fundamental_circuit(m, basis, e);
}

// position[e] for basis elements, validating that basis_order enumerates B.
std::vector<int> basis_positions(const matroids::Matroid& m, const Subset& basis,
                                 const std::vector<int>& basis_order) {
  if (!m.is_basis(basis)) throw std::invalid_argument("B is not a basis");
  if (basis_order.size() != basis.count()) {
    throw std::invalid_argument("basis order must list every basis element once");
  }
  std::vector<int> position(m.size(), 0);
  for (std::size_t i = 0; i < basis_order.size(); ++i) {
    const int e = basis_order[i];
    if (e < 0 || static_cast<std::size_t>(e) >= m.size() || !basis.contains(e) ||
        position[static_cast<std::size_t>(e)] != 0) {
      throw std::invalid_argument("basis order must list every basis element once");
    }
    position[static_cast<std::size_t>(e)] = static_cast<int>(i) + 1;
  }
  return position;
}

// Largest basis position on C(B, e) - e; zero for loops.
std::vector<int> circuit_maxima(const matroids::Matroid& m, const Subset& basis,
                                const std::vector<int>& position) {
  std::vector<int> top(m.size(), 0);
  for (std::size_t e = 0; e < m.size(); ++e) {
    const int el = static_cast<int>(e);
    if (basis.contains(el)) continue;
    const Subset c = circuit_of(m, basis, el);
    c.for_each([&](int b) {
      if (b != el) top[e] = std::max(top[e], position[static_cast<std::size_t>(b)]);
    });
  }
  return top;
}

}  // namespace

std::int64_t fixed_basis_objective(const matroids::Matroid& m, const Subset& basis,
                                   const std::vector<int>& basis_order) {
  const std::vector<int> position = basis_positions(m, basis, basis_order);
  const std::vector<int> top = circuit_maxima(m, basis, position);
  const auto k = static_cast<std::int64_t>(basis_order.size());
  std::int64_t total = k * (k + 1) / 2;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (!basis.contains(static_cast<int>(e))) total += top[e];
  }
  return total;
}

Ordering fixed_basis_extension(const matroids::Matroid& m, const Subset& basis,
                               const std::vector<int>& basis_order) {
  const std::vector<int> position = basis_positions(m, basis, basis_order);
  const std::vector<int> top = circuit_maxima(m, basis, position);
  std::vector<std::vector<int>> after(basis_order.size() + 1);
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (!basis.contains(static_cast<int>(e))) {
      after[static_cast<std::size_t>(top[e])].push_back(static_cast<int>(e));
    }
  }
  std::vector<int> seq(after[0]);
  for (std::size_t i = 0; i < basis_order.size(); ++i) {
    seq.push_back(basis_order[i]);
    seq.insert(seq.end(), after[i + 1].begin(), after[i + 1].end());
  }
  return Ordering::from_sequence(std::move(seq));
}

std::vector<Subset> enumerate_bases(const matroids::Matroid& m, std::size_t max_bases) {
  const auto k = static_cast<std::size_t>(m.full_rank());
  const std::size_t n = m.size();
  std::vector<Subset> bases;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    const Subset s = Subset::from_elements(pick);
    if (m.rank(s) == static_cast<std::int64_t>(k)) {
      if (bases.size() == max_bases) {
        throw CapacityError("more than " + std::to_string(max_bases) + " bases");
      }
      bases.push_back(s);
    }
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && static_cast<std::size_t>(pick[i - 1]) == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return bases;
}

Solution small_basis_exact(const matroids::Matroid& m, const BasisSearchLimits& limits) {
  const auto k = static_cast<std::size_t>(m.full_rank());
  if (k > limits.max_rank) {
    throw CapacityError("rank " + std::to_string(k) + " exceeds the basis-order cap of " +
                        std::to_string(limits.max_rank));
  }
  const std::vector<Subset> bases = enumerate_bases(m, limits.max_bases);

  struct Local {
    std::int64_t sum = std::numeric_limits<std::int64_t>::max();
    std::vector<int> order;
  };
  std::vector<Local> results(bases.size());
  auto search = [&](std::size_t index) {
    const Subset& basis = bases[index];
    const std::vector<int> elems = basis.elements();
    // Fundamental circuits as masks over basis indices.
    std::vector<std::uint64_t> masks;
    std::vector<int> identity_pos(m.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      identity_pos[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
    }
    for (std::size_t e = 0; e < m.size(); ++e) {
      const int el = static_cast<int>(e);
      if (basis.contains(el)) continue;
      std::uint64_t mask = 0;
      circuit_of(m, basis, el).for_each([&](int b) {
        if (b != el) mask |= std::uint64_t{1} << identity_pos[static_cast<std::size_t>(b)];
      });
      masks.push_back(mask);
    }
    std::vector<int> perm(elems.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> pos(elems.size());
    Local& local = results[index];
    do {
      for (std::size_t p = 0; p < perm.size(); ++p) {
        pos[static_cast<std::size_t>(perm[p])] = static_cast<int>(p) + 1;
      }
      std::int64_t sum = 0;
      for (std::uint64_t mask : masks) {
        int top = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          top = std::max(top, pos[static_cast<std::size_t>(std::countr_zero(rest))]);
        }
        sum += top;
      }
      if (sum < local.sum) {
        local.sum = sum;
        local.order.clear();
        for (int p : perm) local.order.push_back(elems[static_cast<std::size_t>(p)]);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(limits.jobs, bases.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < bases.size(); ++i) search(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&]() {
        for (std::size_t i = next++; i < bases.size(); i = next++) search(i);
      });
    }
    for (std::thread& t : workers) t.join();
  }
  std::size_t winner = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].sum < results[winner].sum) winner = i;
  }
  const auto kk = static_cast<std::int64_t>(k);
  Solution out;
  out.value = Rational(static_cast<long>(kk * (kk + 1) / 2 + results[winner].sum));
  out.ordering = fixed_basis_extension(m, bases[winner], results[winner].order);
  return out;
}

std::vector<std::vector<int>> edge_blocks(const Graph& graph) {
  const auto n = static_cast<std::size_t>(graph.num_vertices());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < graph.num_edges(); ++i) {
    const Edge& e = graph.edge(i);
    if (e.u == e.v) {
      blocks.push_back({static_cast<int>(i)});
      continue;
    }
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<int>(i)});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<int>(i)});
  }
  std::vector<int> disc(n, 0);
  std::vector<int> low(n, 0);
  std::vector<int> stack;
  int clock = 0;
  auto dfs = [&](auto&& self, int u, int parent_edge) -> void {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++clock;
    for (const auto& [v, id] : adj[static_cast<std::size_t>(u)]) {
      if (id == parent_edge) continue;
      const auto uu = static_cast<std::size_t>(u);
      const auto vv = static_cast<std::size_t>(v);
      if (disc[vv] == 0) {
        stack.push_back(id);
        self(self, v, id);
        low[uu] = std::min(low[uu], low[vv]);
        if (low[vv] >= disc[uu]) {
          std::vector<int> block;
          while (true) {
            const int top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == id) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[vv] < disc[uu]) {
        stack.push_back(id);
        low[uu] = std::min(low[uu], disc[vv]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] == 0) dfs(dfs, static_cast<int>(v), -1);
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

namespace {

std::size_t block_vertices(const Graph& graph, const std::vector<int>& block) {
  std::vector<int> vs;
  for (int id : block) {
    vs.push_back(graph.edge(static_cast<std::size_t>(id)).u);
    vs.push_back(graph.edge(static_cast<std::size_t>(id)).v);
  }
  std::sort(vs.begin(), vs.end());
  return static_cast<std::size_t>(std::unique(vs.begin(), vs.end()) - vs.begin());
}

}  // namespace

bool is_cactus(const Graph& graph) {
  for (const auto& block : edge_blocks(graph)) {
    if (block.size() > 1 && block_vertices(graph, block) != block.size()) return false;
  }
  return true;
}

Solution cactus_exact(const Graph& graph) {
  std::vector<int> loops;
  std::vector<std::vector<int>> cycles;
  std::vector<int> bridges;
  for (auto& block : edge_blocks(graph)) {
    if (block.size() > 1) {
      if (block_vertices(graph, block) != block.size()) {
        throw std::invalid_argument("graph is not a cactus: a block is neither an edge nor a cycle");
      }
      cycles.push_back(std::move(block));
      continue;
    }
    const Edge& e = graph.edge(static_cast<std::size_t>(block[0]));
    (e.u == e.v ? loops : bridges).push_back(block[0]);
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::sort(loops.begin(), loops.end());
  std::sort(bridges.begin(), bridges.end());
  std::vector<int> seq = loops;
  for (const auto& c : cycles) seq.insert(seq.end(), c.begin(), c.end());
  seq.insert(seq.end(), bridges.begin(), bridges.end());
  Solution out;
  out.ordering = Ordering::from_sequence(std::move(seq));
  out.value = mlop_objective(matroids::graphic(graph).rank_function(), out.ordering);
  return out;
}

bool has_flat_structure(const matroids::Matroid& m, const Ordering& order) {
  const std::size_t n = m.size();
  if (order.size() != n) throw std::invalid_argument("ordering does not match the matroid");
  std::vector<std::int64_t> ranks(n + 1, 0);
  for (std::size_t t = 1; t <= n; ++t) ranks[t] = m.rank(order.prefix(t));
  for (std::size_t t = 0; t <= n; ++t) {
    if (t < n && ranks[t + 1] == ranks[t]) continue;
    const Subset prefix = order.prefix(t);
    for (std::size_t e = 0; e < n; ++e) {
      const int el = static_cast<int>(e);
      if (prefix.contains(el)) continue;
      Subset grown = prefix;
      grown.insert(el);
      if (m.rank(grown) == ranks[t]) return false;
    }
  }
  return true;
}

}  // namespace ordolab::solve
