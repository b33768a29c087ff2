#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddprism/constructions.hpp"
#include "oddprism/containment.hpp"

namespace oddprism {

enum class SearchMode { max_only, enumerate_extremal };

struct SearchConfig {
  int n = 0;
  std::vector<Pattern> forbidden;
  SearchMode mode = SearchMode::max_only;
  /// Known achievable edge count. With a witness graph the bound is trusted;
  /// without one, a search that finds nothing at or above it is rerun
  /// unseeded.
  std::optional<std::int64_t> seed_lower_bound;
  std::optional<Graph> seed_witness;
  /// Stop after this many search nodes; the result is then non-exhaustive.
  std::optional<std::uint64_t> node_budget;
  int threads = 1;
  /// Orders above kFeasibleOrder are refused unless this is set.
  bool allow_large = false;
};

inline constexpr int kFeasibleOrder = 10;

struct SearchResult {
  int n = 0;
  /// -1 when no graph on n vertices avoids the forbidden patterns.
  std::int64_t max_edges = -1;
  /// Canonical graph6 of every extremal class, sorted. Filled in
  /// enumerate_extremal mode only.
  std::vector<std::string> extremal;
  /// One graph attaining max_edges (graph6). Which one is reported in
  /// max-only mode may depend on scheduling.
  std::optional<std::string> witness;
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned_by_bound = 0;
  double wall_time_seconds = 0.0;
  bool exhaustive = true;
  std::optional<std::int64_t> seed_used;
};

/// Exact Turán number by canonical augmentation with bound pruning.
SearchResult turan_exact(const SearchConfig& config);

/// Calls `visit` once per isomorphism class of n-vertex graphs avoiding
/// every pattern. Returns the number of classes. Throws CapacityError when
/// the budget runs out.
std::uint64_t enumerate_free_graphs(int n, std::span<const Pattern> forbidden,
                                    const std::function<void(const Graph&)>& visit,
                                    std::optional<std::uint64_t> node_budget = std::nullopt,
                                    bool allow_large = false);

/// Best pattern-free graph among the named constructions of order n.
struct SeedWitness {
  std::int64_t edges = 0;
  ConstructionSpec spec;
  Graph graph;
};
std::optional<SeedWitness> construction_seed(int n, std::span<const Pattern> forbidden);

/// Constructions tried by construction_seed.
std::vector<ConstructionSpec> seed_pool(int n);

struct FixedBodyResult {
  std::int64_t max_edges = -1;  // total, body included
  int max_added = -1;
  /// Every subset of the optional edges reaching max_edges, each listed in
  /// input order; subsets are sorted lexicographically by index.
  std::vector<std::vector<Edge>> maximizing_subsets;
  /// Canonical graph6 of the maximizing graphs, sorted and deduplicated.
  std::vector<std::string> extremal;
};

/// Exhaustive search over subsets of `optional_edges` added to `body`.
FixedBodyResult max_supergraph_over_fixed_body(const Graph& body, std::span<const Edge> optional_edges,
                                               const Pattern& forbidden);

}  // namespace oddprism
