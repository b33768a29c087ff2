#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddprism/graph.hpp"

namespace oddprism {

/// Injective map from pattern vertices to host vertices; embedding[p] is
/// the host image of pattern vertex p.
using Embedding = std::vector<Vertex>;

/// A forbidden graph prepared for repeated non-induced containment tests.
class Pattern {
 public:
  enum class Kind { generic, p4, prism1 };

  Pattern() = default;
  explicit Pattern(Graph g, std::string name = {});

  const Graph& graph() const { return graph_; }
  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  int order() const { return graph_.order(); }

  /// Pattern vertices in matching order: each vertex after the first has,
  /// when the pattern allows it, a neighbour earlier in the order.
  const std::vector<Vertex>& search_order() const { return orders_[start_]; }
  const std::vector<int>& degrees() const { return degrees_; }

  // Internals used by the matcher.
  struct Step {
    Vertex vertex;
    int degree;
    std::uint64_t earlier_neighbors;  // positions, not vertices
  };
  const std::vector<Step>& steps_from(Vertex start) const { return steps_[start]; }
  const std::vector<Step>& steps() const { return steps_[start_]; }
  /// One representative per orbit of Aut(pattern).
  const std::vector<Vertex>& orbit_representatives() const { return orbit_reps_; }

 private:
  Graph graph_;
  std::string name_;
  Kind kind_ = Kind::generic;
  Vertex start_ = 0;
  std::vector<int> degrees_;
  std::vector<std::vector<Vertex>> orders_;
  std::vector<std::vector<Step>> steps_;
  std::vector<Vertex> orbit_reps_;
};

std::optional<Embedding> contains(const Graph& host, const Pattern& pattern);
std::optional<Embedding> contains(const Graph& host, const Graph& pattern);

/// Same question restricted to copies that use host vertex `anchor`.
std::optional<Embedding> contains_through(const Graph& host, const Pattern& pattern, Vertex anchor);

/// Visits every embedding (no symmetry reduction). Return false from the
/// visitor to stop. Returns the number visited.
std::size_t for_each_embedding(const Graph& host, const Pattern& pattern,
                               const std::function<bool(const Embedding&)>& visit);

/// Works at any order; above 64 vertices it checks that every component
/// is a star or a triangle.
bool is_p4_free(const Graph& g);
bool prism_free(const Graph& g, int k);
std::optional<Embedding> find_prism(const Graph& g, int k);

bool is_free(const Graph& host, std::span<const Pattern> patterns);

/// Every edge of the pattern lands on a host edge and the map is injective.
bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& emb);

namespace match {

/// Single-word kernels used by the search. `anchor` < 0 means unanchored.
bool contains_rows(const std::uint64_t* rows, int n, const Pattern& pattern, int anchor,
                   Embedding* witness);
bool p4_in_rows(const std::uint64_t* rows, int n, int anchor);
bool prism1_in_rows(const std::uint64_t* rows, int n, int anchor, Embedding* witness);

}  // namespace match

}  // namespace oddprism
