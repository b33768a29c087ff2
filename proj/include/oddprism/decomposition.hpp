#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddprism/containment.hpp"

namespace oddprism {

/// (M ∪ complement(K_t)) ⊗ T_{p-1}((p-1)t). M keeps labels 0..|M|-1, the
/// t extra vertices of its class follow, then the other p-1 classes.
Graph decomposition_host(const Graph& m, int p, int t);

/// χ(L) - 1.
int decomposition_parts(const Graph& l);

struct MembershipResult {
  bool member = false;
  /// Smallest t <= t_max for which the host contains L (-1 if none).
  int t = -1;
  /// Embedding of L into decomposition_host(M, p, t).
  Embedding embedding;
  /// Why M fails, when it does.
  std::string reason;
};

/// M is a member when some t <= t_max gives a host containing L and no
/// one-edge-deleted or one-vertex-deleted M does at t_max. Containment only
/// grows with t and shrinks under taking subgraphs, so these checks decide
/// minimality over all proper subgraphs.
MembershipResult is_decomposition_member(const Graph& l, const Graph& m, int p, int t_max);

struct DecompositionResult {
  int p = 0;
  int t_max = 0;
  int m_max = 0;
  /// Canonical graph6 of every minimal member, sorted.
  std::vector<std::string> family;
  /// Number of isolated-vertex-free candidates whose host contains L.
  std::size_t hits = 0;
  std::size_t candidates = 0;
};

/// Minimal members with at most m_max vertices. t_max defaults to |V(L)|.
/// Throws GraphError for bipartite L.
DecompositionResult decomposition_family(const Graph& l, int m_max, std::optional<int> t_max = std::nullopt,
                                         int threads = 1);

}  // namespace oddprism
