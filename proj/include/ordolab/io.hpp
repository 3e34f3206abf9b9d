#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ordolab/core.hpp"
#include "ordolab/matroids.hpp"

namespace ordolab::io {

// Malformed instance text. Lines and columns are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// All formats skip blank lines and '#' comments.
//
// Graph: "n m", then m lines "u v [w]" with 1-based vertices and an optional
// positive rational weight (integer, p/q or decimal). Loops are allowed.
Graph parse_graph(std::string_view text);

// Matrix: "k m", then k rows of m integers.
matroids::IntMatrix parse_matrix(std::string_view text);

// Hypergraph: "n h", then h lines each listing the distinct vertices of one
// hyperedge.
Hypergraph parse_hypergraph(std::string_view text);

std::string format_graph(const Graph& graph);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// FNV-1a 64 of the raw bytes, 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace ordolab::io
