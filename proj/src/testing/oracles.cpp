#include "ordolab/testing/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ordolab::testing {

namespace {

template <typename Fn>
void for_each_permutation(std::size_t m, Fn&& fn) {
  if (m > 10) throw CapacityError("brute force handles at most 10 elements");
  std::vector<int> seq(m);
  std::iota(seq.begin(), seq.end(), 0);
  do {
    fn(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
}

}  // namespace

BruteMlop brute_force_mlop(const SetFunction& f) {
  BruteMlop best;
  bool first = true;
  for_each_permutation(f.size(), [&](const std::vector<int>& seq) {
    Rational total = 0;
    Subset prefix;
    for (int e : seq) {
      prefix.insert(e);
      total += f(prefix);
    }
    if (first || total < best.value) {
      best.value = total;
      best.ordering = Ordering::from_sequence(seq);
      first = false;
    }
  });
  return best;
}

BruteMlop brute_force_weighted_mlop(const SetFunction& f, const std::vector<std::int64_t>& costs) {
  BruteMlop best;
  bool first = true;
  for_each_permutation(f.size(), [&](const std::vector<int>& seq) {
    Rational total = 0;
    Subset prefix;
    for (int e : seq) {
      prefix.insert(e);
      total += f(prefix) * Rational(static_cast<long>(costs[static_cast<std::size_t>(e)]));
    }
    if (first || total < best.value) {
      best.value = total;
      best.ordering = Ordering::from_sequence(seq);
      first = false;
    }
  });
  return best;
}

BruteMin brute_force_min(const SetFunction& f, const Rational& lambda, const Subset& include,
                         const Subset& exclude) {
  BruteMin out;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
    const Subset s = Subset::from_mask(mask);
    if (!include.is_subset_of(s) || s.intersects(exclude)) continue;
    const Rational v = f(s) - lambda * Rational(static_cast<long>(s.count()));
    if (first || v < out.value) {
      out.value = v;
      out.minimizers.clear();
      first = false;
    }
    if (v == out.value) out.minimizers.push_back(s);
  }
  return out;
}

std::int64_t brute_force_mlvc(const Graph& graph) {
  std::int64_t best = -1;
  for_each_permutation(static_cast<std::size_t>(graph.num_vertices()),
                       [&](const std::vector<int>& seq) {
                         std::vector<int> pos(seq.size());
                         for (std::size_t i = 0; i < seq.size(); ++i) {
                           pos[static_cast<std::size_t>(seq[i])] = static_cast<int>(i) + 1;
                         }
                         std::int64_t total = 0;
                         for (const Edge& e : graph.edges()) {
                           total += std::max(pos[static_cast<std::size_t>(e.u)],
                                             pos[static_cast<std::size_t>(e.v)]);
                         }
                         if (best < 0 || total < best) best = total;
                       });
  return best;
}

std::int64_t graphic_rank_naive(const Graph& graph, const Subset& edges) {
  // Label propagation until stable.
  std::vector<int> label(static_cast<std::size_t>(graph.num_vertices()));
  std::iota(label.begin(), label.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    edges.for_each([&](int id) {
      const Edge& e = graph.edge(static_cast<std::size_t>(id));
      int& a = label[static_cast<std::size_t>(e.u)];
      int& b = label[static_cast<std::size_t>(e.v)];
      if (a != b) {
        a = b = std::min(a, b);
        changed = true;
      }
    });
  }
  const std::set<int> components(label.begin(), label.end());
  return graph.num_vertices() - static_cast<std::int64_t>(components.size());
}

std::int64_t incidence_rank_gf2(const Graph& graph, const Subset& edges) {
  std::vector<std::vector<std::uint8_t>> cols;
  edges.for_each([&](int id) {
    std::vector<std::uint8_t> col(static_cast<std::size_t>(graph.num_vertices()), 0);
    const Edge& e = graph.edge(static_cast<std::size_t>(id));
    col[static_cast<std::size_t>(e.u)] ^= 1;
    col[static_cast<std::size_t>(e.v)] ^= 1;
    cols.push_back(col);
  });
  std::int64_t rank = 0;
  const auto rows = static_cast<std::size_t>(graph.num_vertices());
  std::size_t next = 0;
  for (std::size_t r = 0; r < rows && next < cols.size(); ++r) {
    std::size_t pivot = next;
    while (pivot < cols.size() && cols[pivot][r] == 0) ++pivot;
    if (pivot == cols.size()) continue;
    std::swap(cols[pivot], cols[next]);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c != next && cols[c][r] != 0) {
        for (std::size_t k = 0; k < rows; ++k) cols[c][k] ^= cols[next][k];
      }
    }
    ++next;
    ++rank;
  }
  return rank;
}

bool is_submodular(const SetFunction& f) {
  const std::uint64_t states = std::uint64_t{1} << f.size();
  std::vector<Rational> v(states);
  for (std::uint64_t s = 0; s < states; ++s) v[s] = f(Subset::from_mask(s));
  for (std::uint64_t s = 0; s < states; ++s) {
    for (std::uint64_t t = 0; t < states; ++t) {
      if (v[s] + v[t] < v[s | t] + v[s & t]) return false;
    }
  }
  return true;
}

bool is_monotone(const SetFunction& f) {
  const std::uint64_t states = std::uint64_t{1} << f.size();
  for (std::uint64_t s = 0; s < states; ++s) {
    const Rational base = f(Subset::from_mask(s));
    for (std::size_t e = 0; e < f.size(); ++e) {
      if ((s >> e) & 1U) continue;
      if (f(Subset::from_mask(s | (std::uint64_t{1} << e))) < base) return false;
    }
  }
  return true;
}

Rational min_over_size(const SetFunction& f, std::size_t size) {
  Rational best;
  bool first = true;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.size()); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != size) continue;
    Rational v = f(Subset::from_mask(s));
    if (first || v < best) {
      best = std::move(v);
      first = false;
    }
  }
  return best;
}

Graph random_connected_graph(Rng& rng, int n, int m) {
  if (m < n - 1 || m > n * (n - 1) / 2) throw std::invalid_argument("impossible edge count");
  Graph g(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::set<std::pair<int, int>> used;
  for (int i = 1; i < n; ++i) {
    const int a = order[static_cast<std::size_t>(i)];
    const int b = order[static_cast<std::size_t>(rng.uniform_int(0, i - 1))];
    used.insert({std::min(a, b), std::max(a, b)});
  }
  while (static_cast<int>(used.size()) < m) {
    const int a = rng.uniform_int(0, n - 1);
    const int b = rng.uniform_int(0, n - 1);
    if (a != b) used.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::pair<int, int>> edges(used.begin(), used.end());
  rng.shuffle(edges);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph random_multigraph(Rng& rng, int n, int m, bool loops) {
  Graph g(n);
  while (static_cast<int>(g.num_edges()) < m) {
    const int a = rng.uniform_int(0, n - 1);
    const int b = rng.uniform_int(0, n - 1);
    if (a == b && !loops) continue;
    g.add_edge(a, b);
  }
  return g;
}

Graph random_cactus(Rng& rng, int max_edges) {
  std::vector<std::pair<int, int>> edges;
  int vertices = 1;
  while (true) {
    const int remaining = max_edges - static_cast<int>(edges.size());
    if (remaining <= 0) break;
    const int anchor = rng.uniform_int(0, vertices - 1);
    // Cycle length 2..5 (2 = a pair of parallel edges) or a bridge.
    const int len = rng.coin(1, 3) ? 1 : rng.uniform_int(2, 5);
    if (len > remaining) {
      if (!edges.empty() && rng.coin(1, 2)) break;
      continue;
    }
    if (len == 1) {
      edges.emplace_back(anchor, vertices++);
    } else {
      int prev = anchor;
      for (int i = 1; i < len; ++i) {
        edges.emplace_back(prev, vertices);
        prev = vertices++;
      }
      edges.emplace_back(prev, anchor);
    }
    if (rng.coin(1, 6)) break;
  }
  // Relabel vertices and shuffle edge labels.
  std::vector<int> relabel(static_cast<std::size_t>(vertices));
  std::iota(relabel.begin(), relabel.end(), 0);
  rng.shuffle(relabel);
  rng.shuffle(edges);
  Graph g(vertices);
  for (const auto& [a, b] : edges) {
    g.add_edge(relabel[static_cast<std::size_t>(a)], relabel[static_cast<std::size_t>(b)]);
  }
  return g;
}

Graph random_weighted_graph(Rng& rng, int n, int m, int max_weight) {
  const Graph shape = random_connected_graph(rng, n, m);
  Graph g(n);
  for (const Edge& e : shape.edges()) {
    g.add_edge(e.u, e.v, Rational(rng.uniform_int(1, max_weight)));
  }
  return g;
}

matroids::IntMatrix random_matrix(Rng& rng, int rows, int cols, int magnitude) {
  matroids::IntMatrix a(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (auto& v : a.data) v = rng.uniform_int(-magnitude, magnitude);
  return a;
}

std::vector<std::pair<int, int>> random_tree(Rng& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(order[static_cast<std::size_t>(rng.uniform_int(0, i - 1))],
                       order[static_cast<std::size_t>(i)]);
  }
  return edges;
}

Ordering random_ordering(Rng& rng, std::size_t size) {
  std::vector<int> seq(size);
  std::iota(seq.begin(), seq.end(), 0);
  rng.shuffle(seq);
  return Ordering::from_sequence(std::move(seq));
}

std::vector<std::pair<int, int>> complete_edge_list(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  const auto all = complete_edge_list(n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if ((mask >> i) & 1U) g.add_edge(all[i].first, all[i].second);
  }
  return g;
}

std::vector<Graph> connected_graphs_up_to_isomorphism(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("isomorphism classes enumerated for n <= 6");
  const auto all = complete_edge_list(n);
  std::vector<int> index(static_cast<std::size_t>(n * n), -1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    index[static_cast<std::size_t>(all[i].first * n + all[i].second)] = static_cast<int>(i);
    index[static_cast<std::size_t>(all[i].second * n + all[i].first)] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::uint64_t canonical = mask;
    for (const auto& perm : perms) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1U) {
          const int a = perm[static_cast<std::size_t>(all[i].first)];
          const int b = perm[static_cast<std::size_t>(all[i].second)];
          image |= std::uint64_t{1} << index[static_cast<std::size_t>(a * n + b)];
        }
      }
      canonical = std::min(canonical, image);
    }
    if (canonical != mask || !seen.insert(mask).second) continue;
    Graph g = graph_from_mask(n, mask);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

Graph triangle_plus_bridge() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  return g;
}

Graph bowtie() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(2, 4);
  return g;
}

Graph parallel_edges(int count) {
  Graph g(2);
  for (int i = 0; i < count; ++i) g.add_edge(0, 1);
  return g;
}

}  // namespace ordolab::testing
