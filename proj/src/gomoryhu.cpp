#include "ordolab/gomoryhu.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "ordolab/random.hpp"
#include "ordolab/solve.hpp"

namespace ordolab::gomoryhu {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(int size,
                                                        const std::vector<std::pair<int, int>>& tree) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < tree.size(); ++i) {
    adj[static_cast<std::size_t>(tree[i].first)].push_back({tree[i].second, static_cast<int>(i)});
    adj[static_cast<std::size_t>(tree[i].second)].push_back({tree[i].first, static_cast<int>(i)});
  }
  return adj;
}

// Vertices reachable from `start` without crossing edge `skip`.
Subset side_of(const std::vector<std::vector<std::pair<int, int>>>& adj, int start, int skip) {
  Subset seen{start};
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& [y, id] : adj[static_cast<std::size_t>(x)]) {
      if (id == skip || seen.contains(y)) continue;
      seen.insert(y);
      stack.push_back(y);
    }
  }
  return seen;
}

void check_spanning_tree(const std::vector<std::pair<int, int>>& tree, int size) {
  if (size < 1 || tree.size() != static_cast<std::size_t>(size - 1)) {
    throw std::invalid_argument("a spanning tree on " + std::to_string(size) + " vertices needs " +
                                std::to_string(size - 1) + " edges");
  }
  for (const auto& [u, v] : tree) {
    if (u < 0 || v < 0 || u >= size || v >= size || u == v) {
      throw std::invalid_argument("tree edge out of range");
    }
  }
  if (side_of(adjacency(size, tree), 0, -1).count() != static_cast<std::size_t>(size)) {
    throw std::invalid_argument("tree edges do not connect every vertex");
  }
}

}  // namespace

Rational GomoryHuTree::total_weight() const {
  Rational total = 0;
  for (const TreeEdge& e : edges) total += e.weight;
  return total;
}

std::vector<std::pair<int, int>> GomoryHuTree::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const TreeEdge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

Subset GomoryHuTree::component(std::size_t index) const {
  const auto adj = adjacency(size, pairs());
  return side_of(adj, edges.at(index).u, static_cast<int>(index));
}

void check_symmetric(const SetFunction& f, std::uint64_t seed) {
  const Subset ground = f.full();
  if (f(Subset()) != 0 || f(ground) != 0) {
    throw std::invalid_argument("symmetric oracle needs f(empty) = f(A) = 0");
  }
  auto check = [&](const Subset& s) {
    if (f(s) != f(ground - s)) {
      throw std::invalid_argument("oracle is not symmetric: f(S) != f(A - S)");
    }
  };
  const std::size_t n = f.size();
  if (n <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      check(Subset::from_mask(mask));
    }
    return;
  }
  Rng rng(seed, 0x5eed);
  for (int trial = 0; trial < 256; ++trial) {
    Subset s;
    for (std::size_t e = 0; e < n; ++e) {
      if (rng.coin(1, 2)) s.insert(static_cast<int>(e));
    }
    check(s);
  }
}

bool verify_cut_property(const SetFunction& f, const GomoryHuTree& tree,
                         const sfm::SfmOptions& options) {
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const TreeEdge& e = tree.edges[i];
    if (f(tree.component(i)) != e.weight) return false;
    if (sfm::st_min_cut(f, e.u, e.v, options).value != e.weight) return false;
  }
  return true;
}

namespace {

GomoryHuTree gusfield(const SetFunction& f, std::uint64_t seed, const sfm::SfmOptions& options) {
  const auto n = static_cast<int>(f.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  auto vertex = [&](int i) { return order[static_cast<std::size_t>(i)]; };
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  std::vector<Rational> flow(static_cast<std::size_t>(n));
  for (int s = 1; s < n; ++s) {
    const auto ss = static_cast<std::size_t>(s);
    const int t = parent[ss];
    const sfm::StCut cut = sfm::st_min_cut(f, vertex(s), vertex(t), options);
    flow[ss] = cut.value;
    for (int i = 0; i < n; ++i) {
      if (i != s && cut.side.contains(vertex(i)) && parent[static_cast<std::size_t>(i)] == t) {
        parent[static_cast<std::size_t>(i)] = s;
      }
    }
    const auto tt = static_cast<std::size_t>(t);
    if (cut.side.contains(vertex(parent[tt]))) {
      parent[ss] = parent[tt];
      parent[tt] = s;
      flow[ss] = flow[tt];
      flow[tt] = cut.value;
    }
  }
  GomoryHuTree tree;
  tree.size = n;
  for (int s = 1; s < n; ++s) {
    const auto ss = static_cast<std::size_t>(s);
    tree.edges.push_back(TreeEdge{vertex(parent[ss]), vertex(s), flow[ss]});
  }
  return tree;
}

}  // namespace

GomoryHuTree build_gh_tree_contraction(const SetFunction& f, const sfm::SfmOptions& options) {
  const auto n = static_cast<int>(f.size());
  struct SuperEdge {
    int a;
    int b;
    Rational w;
  };
  std::vector<std::vector<int>> members{std::vector<int>(static_cast<std::size_t>(n))};
  std::iota(members[0].begin(), members[0].end(), 0);
  std::vector<SuperEdge> links;
  while (true) {
    int split = -1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].size() >= 2) {
        split = static_cast<int>(i);
        break;
      }
    }
    if (split < 0) break;
    const std::vector<int> inside = members[static_cast<std::size_t>(split)];
    // One contracted element per subtree hanging off the split supernode.
    std::vector<int> incident;
    std::vector<Subset> blobs;
    for (std::size_t li = 0; li < links.size(); ++li) {
      const SuperEdge& l = links[li];
      if (l.a != split && l.b != split) continue;
      const int start = l.a == split ? l.b : l.a;
      std::vector<bool> seen(members.size(), false);
      seen[static_cast<std::size_t>(split)] = true;
      seen[static_cast<std::size_t>(start)] = true;
      std::vector<int> stack{start};
      Subset blob;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int v : members[static_cast<std::size_t>(x)]) blob.insert(v);
        for (const SuperEdge& o : links) {
          const int y = o.a == x ? o.b : (o.b == x ? o.a : -1);
          if (y < 0 || seen[static_cast<std::size_t>(y)]) continue;
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
      incident.push_back(static_cast<int>(li));
      blobs.push_back(blob);
    }
    const std::size_t k = inside.size();
    const SetFunction g(k + blobs.size(), [&f, inside, blobs, k](const Subset& s) {
      Subset expanded;
      s.for_each([&](int e) {
        const auto idx = static_cast<std::size_t>(e);
        if (idx < k) {
          expanded.insert(inside[idx]);
        } else {
          expanded |= blobs[idx - k];
        }
      });
      return f(expanded);
    });
    const sfm::StCut cut = sfm::st_min_cut(g, 0, 1, options);
    std::vector<int> keep;
    std::vector<int> move;
    for (std::size_t i = 0; i < k; ++i) {
      (cut.side.contains(static_cast<int>(i)) ? keep : move).push_back(inside[i]);
    }
    const int fresh = static_cast<int>(members.size());
    members[static_cast<std::size_t>(split)] = keep;
    members.push_back(move);
    for (std::size_t j = 0; j < incident.size(); ++j) {
      if (cut.side.contains(static_cast<int>(k + j))) continue;
      SuperEdge& l = links[static_cast<std::size_t>(incident[j])];
      (l.a == split ? l.a : l.b) = fresh;
    }
    links.push_back(SuperEdge{split, fresh, cut.value});
  }
  GomoryHuTree tree;
  tree.size = n;
  for (const SuperEdge& l : links) {
    tree.edges.push_back(TreeEdge{members[static_cast<std::size_t>(l.a)][0],
                                  members[static_cast<std::size_t>(l.b)][0], l.w});
  }
  return tree;
}

GomoryHuTree build_gh_tree(const SetFunction& f, std::uint64_t seed,
                           const sfm::SfmOptions& options, BuildStats* stats) {
  if (f.size() == 0) throw std::invalid_argument("Gomory-Hu tree needs a nonempty ground");
  check_symmetric(f, seed);
  GomoryHuTree tree = gusfield(f, seed, options);
  const bool fallback = !verify_cut_property(f, tree, options);
  if (fallback) {
    tree = build_gh_tree_contraction(f, options);
    if (!verify_cut_property(f, tree, options)) {
      throw std::logic_error("Gomory-Hu construction failed its cut-property check");
    }
  }
  if (stats != nullptr) stats->used_fallback = fallback;
  return tree;
}

Rational gh_lower_bound(const GomoryHuTree& tree) { return tree.total_weight(); }

namespace {

SetFunction tree_cut_function(const GomoryHuTree& tree) {
  return SetFunction(static_cast<std::size_t>(tree.size), [tree](const Subset& s) {
    Rational total = 0;
    for (const TreeEdge& e : tree.edges) {
      if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
    }
    return total;
  });
}

}  // namespace

UpperBound gh_upper_bound(const SetFunction& f, const GomoryHuTree& tree) {
  if (f.size() != static_cast<std::size_t>(tree.size)) {
    throw std::invalid_argument("tree and oracle have different grounds");
  }
  const SetFunction w = tree_cut_function(tree);
  UpperBound out;
  if (tree.size <= 12) {
    const solve::Solution best = solve::exact_mlop_dp(w);
    out.value = best.value;
    out.ordering = best.ordering;
    out.exact = true;
    return out;
  }
  const auto adj = adjacency(tree.size, tree.pairs());
  std::vector<int> seq;
  std::vector<bool> seen(static_cast<std::size_t>(tree.size), false);
  std::function<void(int)> dfs = [&](int x) {
    seen[static_cast<std::size_t>(x)] = true;
    seq.push_back(x);
    std::vector<int> next;
    for (const auto& [y, id] : adj[static_cast<std::size_t>(x)]) next.push_back(y);
    std::sort(next.begin(), next.end());
    for (int y : next) {
      if (!seen[static_cast<std::size_t>(y)]) dfs(y);
    }
  };
  dfs(0);
  out.ordering = Ordering::from_sequence(std::move(seq));
  out.value = mlop_objective(w, out.ordering);
  return out;
}

Rational tree_cut_sum(const SetFunction& f, const std::vector<std::pair<int, int>>& tree) {
  const auto size = static_cast<int>(f.size());
  check_spanning_tree(tree, size);
  const auto adj = adjacency(size, tree);
  Rational total = 0;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    total += f(side_of(adj, tree[i].first, static_cast<int>(i)));
  }
  return total;
}

std::vector<std::vector<std::pair<int, int>>> all_spanning_trees(int size) {
  if (size < 1) throw std::invalid_argument("need at least one vertex");
  if (size > 8) throw CapacityError("spanning-tree enumeration handles at most 8 vertices");
  if (size == 1) return {{}};
  if (size == 2) return {{{0, 1}}};
  std::vector<std::vector<std::pair<int, int>>> trees;
  const auto n = static_cast<std::size_t>(size);
  std::vector<int> code(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::vector<std::pair<int, int>> edges;
    for (int c : code) {
      for (std::size_t leaf = 0; leaf < n; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(static_cast<int>(leaf), c);
          --degree[leaf];
          --degree[static_cast<std::size_t>(c)];
          break;
        }
      }
    }
    std::vector<int> last;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) last.push_back(static_cast<int>(v));
    }
    edges.emplace_back(last[0], last[1]);
    trees.push_back(std::move(edges));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == size) code[i++] = 0;
    if (i == code.size()) break;
  }
  return trees;
}

TreeMlop tree_mlop(const SetFunction& f, std::uint64_t seed, const sfm::SfmOptions& options) {
  TreeMlop out;
  out.tree = build_gh_tree(f, seed, options);
  out.value = out.tree.total_weight();
  if (f.size() <= 6) {
    Rational best = out.value;
    for (const auto& t : all_spanning_trees(static_cast<int>(f.size()))) {
      best = std::min(best, tree_cut_sum(f, t));
    }
    out.certified = best == out.value;
  }
  return out;
}

std::vector<int> matching_certificate(const std::vector<std::pair<int, int>>& t1,
                                      const std::vector<std::pair<int, int>>& t2, int size) {
  check_spanning_tree(t1, size);
  check_spanning_tree(t2, size);
  const auto adj2 = adjacency(size, t2);
  const std::size_t k = t1.size();
  // T1 edge i may take T2 edge j when removing j separates i's endpoints.
  std::vector<std::vector<int>> options(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Subset side = side_of(adj2, t2[j].first, static_cast<int>(j));
    for (std::size_t i = 0; i < k; ++i) {
      if (side.contains(t1[i].first) != side.contains(t1[i].second)) {
        options[i].push_back(static_cast<int>(j));
      }
    }
  }
  std::vector<int> owner(k, -1);
  std::vector<int> partner(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> visited(k, false);
    std::function<bool(int)> augment = [&](int x) {
      for (int j : options[static_cast<std::size_t>(x)]) {
        const auto jj = static_cast<std::size_t>(j);
        if (visited[jj]) continue;
        visited[jj] = true;
        if (owner[jj] < 0 || augment(owner[jj])) {
          owner[jj] = x;
          partner[static_cast<std::size_t>(x)] = j;
          return true;
        }
      }
      return false;
    };
    if (!augment(static_cast<int>(i))) {
      throw std::logic_error("separation graph has no perfect matching");
    }
  }
  return partner;
}

Invariance gh_weight_invariance(const SetFunction& f, std::size_t runs, std::uint64_t seed,
                                const sfm::SfmOptions& options) {
  if (runs < 2) throw std::invalid_argument("weight invariance needs at least two runs");
  Invariance out;
  for (std::size_t r = 0; r < runs; ++r) {
    Rng stream(seed, r + 1);
    out.totals.push_back(build_gh_tree(f, stream.next(), options).total_weight());
    out.equal = out.equal && out.totals.back() == out.totals.front();
  }
  return out;
}

}  // namespace ordolab::gomoryhu
