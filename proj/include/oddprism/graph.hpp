#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddprism {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown for malformed input: out-of-range endpoints, loops, bad parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a result would not fit the representation (or an exact
/// exponential-time routine is asked to run beyond its size cap).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Undirected simple graph on vertices 0..n-1 stored as one bit-vector row
/// per vertex. Rows are a single machine word when n <= 64, which is the
/// path every search kernel takes; larger orders use multi-word rows.
class Graph {
 public:
  static constexpr int kMaxOrder = 4096;
  static constexpr int kWordOrder = 64;

  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph with exactly the given edges; duplicates collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  bool empty() const { return n_ == 0; }

  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  /// Neighbour row as one word. Requires order() <= 64.
  std::uint64_t row64(Vertex v) const;
  std::vector<std::uint64_t> rows64() const;
  static Graph from_rows64(int n, std::span<const std::uint64_t> rows);

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;
  Graph induced(std::span<const Vertex> keep) const;
  Graph without_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(Vertex v) const;
  void check_pair(Vertex u, Vertex v) const;
  std::uint64_t& word(Vertex u, Vertex v) {
    return bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
  }
  std::uint64_t word(Vertex u, Vertex v) const {
    return bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
  }

  int n_ = 0;
  int words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complete_graph(int n);
Graph empty_graph(int n);

Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two vertex sets. g1 keeps
/// labels 0..|g1|-1, g2 is shifted by |g1|.
Graph join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
/// Vertex (a, b) is labelled a * |h| + b.
Graph cartesian_product(const Graph& g, const Graph& h);

struct BasicStats {
  std::vector<int> degrees;
  int min_degree = 0;
  int independence_number = 0;
  int chromatic_number = 0;
};

/// Exact α and χ are exponential; both require n <= kExactStatsCap.
inline constexpr int kExactStatsCap = 32;

int independence_number(const Graph& g);
int chromatic_number(const Graph& g);
BasicStats basic_stats(const Graph& g);

bool is_bipartite(const Graph& g);

std::string describe(const Graph& g);

}  // namespace oddprism
