#include "ordolab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace ordolab {

Graph::Graph(int num_vertices) : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int num_vertices, std::vector<Edge> edges) : Graph(num_vertices) {
  for (Edge& e : edges) add_edge(e.u, e.v, std::move(e.weight));
}

int Graph::add_edge(int u, int v, Rational weight) {
  if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
    throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")");
  }
  if (weight <= 0) throw std::invalid_argument("edge weights must be positive");
  edges_.push_back(Edge{u, v, std::move(weight)});
  return static_cast<int>(edges_.size()) - 1;
}

bool Graph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u == e.v) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

bool Graph::has_edge(int u, int v) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  });
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(num_vertices_), 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

std::optional<int> Graph::regular_degree() const {
  const std::vector<int> deg = degrees();
  if (deg.empty()) return 0;
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) {
    return std::nullopt;
  }
  return deg.front();
}

bool Graph::is_connected() const {
  if (num_vertices_ <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(num_vertices_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  int components = num_vertices_;
  for (const Edge& e : edges_) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<int> Graph::isolated_vertices() const {
  const std::vector<int> deg = degrees();
  std::vector<int> out;
  for (int v = 0; v < num_vertices_; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 0) out.push_back(v);
  }
  return out;
}

Graph Graph::complement() const {
  if (!is_simple()) throw std::invalid_argument("complement requires a simple graph");
  Graph out(num_vertices_);
  for (int u = 0; u < num_vertices_; ++u) {
    for (int v = u + 1; v < num_vertices_; ++v) {
      if (!has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("a simple cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Hypergraph::Hypergraph(int num_vertices, std::vector<std::vector<int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    std::vector<int>& e = edges_[i];
    if (e.empty()) {
      throw std::invalid_argument("hyperedge " + std::to_string(i) + " is empty");
    }
    for (int v : e) {
      if (v < 0 || v >= num_vertices) {
        throw std::out_of_range("hyperedge " + std::to_string(i) + " has vertex " +
                                std::to_string(v) + " out of range");
      }
    }
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("hyperedge " + std::to_string(i) + " repeats a vertex");
    }
  }
}

Hypergraph Hypergraph::from_graph(const Graph& graph) {
  std::vector<std::vector<int>> edges;
  edges.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    if (e.u == e.v) {
      edges.push_back({e.u});
    } else {
      edges.push_back({e.u, e.v});
    }
  }
  return Hypergraph(graph.num_vertices(), std::move(edges));
}

std::size_t Hypergraph::max_edge_size() const {
  std::size_t best = 0;
  for (const auto& e : edges_) best = std::max(best, e.size());
  return best;
}

}  // namespace ordolab
