#include "ordolab/io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace ordolab::io {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

// Non-blank lines with comments stripped, split on whitespace.
class Reader {
 public:
  explicit Reader(std::string_view text) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view raw = text.substr(start, end - start);
      if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      Line line{number, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
        const std::size_t begin = i;
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
        if (i > begin) {
          line.tokens.push_back({raw.substr(begin, i - begin), static_cast<int>(begin) + 1});
        }
      }
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
      last_line_ = number;
      start = end + 1;
    }
  }

  bool done() const { return next_ >= lines_.size(); }

  const Line& take(std::string_view what) {
    if (done()) throw ParseError("unexpected end of input; expected " + std::string(what),
                                 last_line_, 1);
    return lines_[next_++];
  }

  void expect_end(std::string_view what) const {
    if (!done()) {
      throw ParseError("unexpected extra line after " + std::string(what), lines_[next_].number,
                       lines_[next_].tokens.front().column);
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  int last_line_ = 0;
};

std::int64_t parse_int(const Line& line, const Token& token, std::string_view what) {
  std::int64_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected integer " + std::string(what) + ", found '" +
                         std::string(token.text) + "'",
                     line.number, token.column);
  }
  return value;
}

void expect_count(const Line& line, std::size_t lo, std::size_t hi, std::string_view what) {
  if (line.tokens.size() < lo || line.tokens.size() > hi) {
    const int column =
        line.tokens.size() > hi ? line.tokens[hi].column : line.tokens.back().column;
    throw ParseError("expected " + std::string(what), line.number, column);
  }
}

std::pair<std::int64_t, std::int64_t> header(Reader& reader, std::string_view first,
                                             std::string_view second, std::int64_t min_first) {
  const Line& line = reader.take("header");
  const std::string what = "header \"" + std::string(first) + " " + std::string(second) + "\"";
  expect_count(line, 2, 2, what);
  const std::int64_t a = parse_int(line, line.tokens[0], first);
  const std::int64_t b = parse_int(line, line.tokens[1], second);
  if (a < min_first || a > static_cast<std::int64_t>(Subset::kCapacity)) {
    throw ParseError(std::string(first) + " must lie in " + std::to_string(min_first) + ".." +
                         std::to_string(Subset::kCapacity),
                     line.number, line.tokens[0].column);
  }
  if (b < 0 || b > 1'000'000) {
    throw ParseError(std::string(second) + " out of range", line.number, line.tokens[1].column);
  }
  return {a, b};
}

int vertex(const Line& line, const Token& token, std::int64_t n) {
  const std::int64_t v = parse_int(line, token, "vertex");
  if (v < 1 || v > n) {
    throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n),
                     line.number, token.column);
  }
  return static_cast<int>(v - 1);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Reader reader(text);
  const auto [n, m] = header(reader, "n", "m", 1);
  Graph graph(static_cast<int>(n));
  for (std::int64_t i = 0; i < m; ++i) {
    const Line& line = reader.take("edge line \"u v [w]\"");
    expect_count(line, 2, 3, "edge line \"u v [w]\"");
    const int u = vertex(line, line.tokens[0], n);
    const int v = vertex(line, line.tokens[1], n);
    Rational w = 1;
    if (line.tokens.size() == 3) {
      try {
        w = parse_rational(line.tokens[2].text);
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed weight '" + std::string(line.tokens[2].text) + "'",
                         line.number, line.tokens[2].column);
      }
      if (w <= 0) {
        throw ParseError("edge weight must be positive", line.number, line.tokens[2].column);
      }
    }
    graph.add_edge(u, v, w);
  }
  reader.expect_end(std::to_string(m) + " edges");
  return graph;
}

matroids::IntMatrix parse_matrix(std::string_view text) {
  Reader reader(text);
  const auto [k, m] = header(reader, "k", "m", 0);
  if (m > static_cast<std::int64_t>(Subset::kCapacity)) {
    throw ParseError("more columns than the ground capacity", 1, 1);
  }
  matroids::IntMatrix matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < k; ++r) {
    const Line& line = reader.take("matrix row");
    const std::string what = "a row of " + std::to_string(m) + " integers";
    expect_count(line, static_cast<std::size_t>(m), static_cast<std::size_t>(m), what);
    for (std::int64_t c = 0; c < m; ++c) {
      matrix.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          parse_int(line, line.tokens[static_cast<std::size_t>(c)], "entry");
    }
  }
  reader.expect_end(std::to_string(k) + " rows");
  return matrix;
}

Hypergraph parse_hypergraph(std::string_view text) {
  Reader reader(text);
  const auto [n, h] = header(reader, "n", "h", 1);
  std::vector<std::vector<int>> edges;
  for (std::int64_t i = 0; i < h; ++i) {
    const Line& line = reader.take("hyperedge line");
    std::vector<int> edge;
    for (const Token& token : line.tokens) {
      const int v = vertex(line, token, n);
      for (int seen : edge) {
        if (seen == v) {
          throw ParseError("vertex " + std::to_string(v + 1) + " repeated in hyperedge",
                           line.number, token.column);
        }
      }
      edge.push_back(v);
    }
    edges.push_back(std::move(edge));
  }
  reader.expect_end(std::to_string(h) + " hyperedges");
  return Hypergraph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& graph) {
  std::ostringstream os;
  os << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (const Edge& e : graph.edges()) {
    os << e.u + 1 << ' ' << e.v + 1;
    if (e.weight != 1) os << ' ' << to_string(e.weight);
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

std::string digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace ordolab::io
