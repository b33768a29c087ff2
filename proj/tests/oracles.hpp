// Independent brute-force references used by the unit and acceptance tests.
// None of these share code with the library's search kernels.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oddprism/graph.hpp"

namespace oracle {

using oddprism::Edge;
using oddprism::Graph;

/// Graph on n vertices whose edge i (in pair order (0,1),(0,2),...,(n-2,n-1))
/// is present iff bit i of mask is set.
inline Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int i = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++i) {
      if ((mask >> i) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Every labelled graph on n vertices (n <= 7).
inline void for_each_labelled(int n, const std::function<void(const Graph&)>& visit) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t m = 0; m < total; ++m) visit(from_mask(n, m));
}

/// Plain injective-map search: pattern vertices in index order, every host
/// vertex tried, edges checked against already mapped vertices.
inline bool contains(const Graph& host, const Graph& pattern, std::vector<int>* witness = nullptr) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  std::vector<int> img(k, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> go = [&](int i) {
    if (i == k) return true;
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (pattern.has_edge(i, j) && !host.has_edge(h, img[j])) ok = false;
      }
      if (!ok) continue;
      img[i] = h;
      used[h] = 1;
      if (go(i + 1)) return true;
      used[h] = 0;
    }
    return false;
  };
  const bool found = go(0);
  if (found && witness) *witness = img;
  return found;
}

/// Some copy of pattern uses host vertex `anchor`.
inline bool contains_through(const Graph& host, const Graph& pattern, int anchor) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  for (int forced = 0; forced < k; ++forced) {
    std::vector<int> img(k, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> go = [&](int i) {
      if (i == k) return true;
      for (int h = 0; h < n; ++h) {
        if (used[h] || (i == forced) != (h == anchor)) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          if (pattern.has_edge(i, j) && !host.has_edge(h, img[j])) ok = false;
        }
        if (!ok) continue;
        img[i] = h;
        used[h] = 1;
        if (go(i + 1)) return true;
        used[h] = 0;
      }
      return false;
    };
    if (go(0)) return true;
  }
  return false;
}

/// Number of injective edge-preserving maps.
inline std::size_t count_embeddings(const Graph& host, const Graph& pattern) {
  const int k = pattern.order();
  const int n = host.order();
  std::vector<int> img(k, -1);
  std::vector<char> used(n, 0);
  std::size_t count = 0;
  std::function<void(int)> go = [&](int i) {
    if (i == k) {
      ++count;
      return;
    }
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (pattern.has_edge(i, j) && !host.has_edge(h, img[j])) ok = false;
      }
      if (!ok) continue;
      img[i] = h;
      used[h] = 1;
      go(i + 1);
      used[h] = 0;
    }
  };
  go(0);
  return count;
}

/// Minimum upper-triangle bit string over all relabellings.
inline std::string canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) code += g.has_edge(perm[u], perm[v]) ? '1' : '0';
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best + "/" + std::to_string(n);
}

/// Same minimum as an integer (first pair is the most significant bit);
/// n <= 11.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) code = (code << 1) | (g.has_edge(perm[u], perm[v]) ? 1U : 0U);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// ex(n, patterns) by scanning every labelled graph (n <= 6).
inline long long turan(int n, const std::vector<Graph>& patterns) {
  long long best = -1;
  for_each_labelled(n, [&](const Graph& g) {
    if (static_cast<long long>(g.edge_count()) <= best) return;
    for (const Graph& p : patterns) {
      if (oracle::contains(g, p)) return;
    }
    best = static_cast<long long>(g.edge_count());
  });
  return best;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
