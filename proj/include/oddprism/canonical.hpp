#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oddprism/graph.hpp"

namespace oddprism {

/// Isomorphism identity of a graph: the graph6 string of the canonically
/// relabelled graph, plus the map from input labels to canonical labels.
struct CanonicalForm {
  std::string canonical_bytes;
  /// relabeling[v] is the canonical label of input vertex v.
  std::vector<int> relabeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.canonical_bytes == b.canonical_bytes;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.canonical_bytes <=> b.canonical_bytes;
  }
};

/// Requires order() <= 64.
CanonicalForm canonical_form(const Graph& g);
std::string canonical_bytes(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Permutation p with p[v] the image of v; an automorphism preserves edges.
using Permutation = std::vector<int>;

namespace canon {

using Rows = std::array<std::uint64_t, 64>;

/// Output of the refinement/backtracking search over a single-word graph.
struct Labeling {
  /// lab[i] is the vertex placed at canonical position i.
  std::array<std::int8_t, 64> lab{};
  /// Automorphisms discovered while searching; they generate a subgroup of
  /// Aut(G) (in practice all of it).
  std::vector<std::array<std::int8_t, 64>> automorphisms;
};

void canonical_labeling(const std::uint64_t* rows, int n, Labeling& out);

/// Rows of the graph relabelled by `lab` (position i gets vertex lab[i]).
void permuted_rows(const std::uint64_t* rows, int n, const std::int8_t* lab, std::uint64_t* out);

/// Orbit representative of every vertex under the group generated by `gens`.
std::array<std::int8_t, 64> orbits(int n, std::span<const std::array<std::int8_t, 64>> gens);

}  // namespace canon

/// Generators of Aut(G) found by the canonical search.
std::vector<Permutation> automorphism_generators(const Graph& g);

}  // namespace oddprism
