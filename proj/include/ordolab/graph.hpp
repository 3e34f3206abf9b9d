#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordolab/rational.hpp"

namespace ordolab {

struct Edge {
  int u = 0;
  int v = 0;
  Rational weight{1};
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// allowed; operations that need a simple graph check is_simple() themselves.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  Graph(int num_vertices, std::vector<Edge> edges);

  // Returns the new edge's index. Weights must be positive.
  int add_edge(int u, int v, Rational weight = Rational(1));

  int num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_simple() const;
  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;
  // The common degree when every vertex has the same degree.
  std::optional<int> regular_degree() const;
  bool is_connected() const;
  std::vector<int> isolated_vertices() const;

  // Complement of a simple graph. Throws std::invalid_argument otherwise.
  Graph complement() const;

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph star(int leaves);

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// Hypergraph with nonempty hyperedges of distinct vertices.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int num_vertices, std::vector<std::vector<int>> edges);

  static Hypergraph from_graph(const Graph& graph);

  int num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<int>& edge(std::size_t index) const { return edges_.at(index); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  // Largest hyperedge size (the parameter written as l in the MLSC bounds).
  std::size_t max_edge_size() const;

 private:
  int num_vertices_ = 0;
  std::vector<std::vector<int>> edges_;
};

}  // namespace ordolab
