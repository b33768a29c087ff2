#include "oddprism/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "oddprism/canonical.hpp"
#include "oddprism/constructions.hpp"
#include "oddprism/search.hpp"

namespace oddprism {

namespace {

bool host_contains(const Graph& m, const Pattern& l, int p, int t, Embedding* witness = nullptr) {
  const Graph host = decomposition_host(m, p, t);
  auto emb = contains(host, l);
  if (emb && witness) *witness = *emb;
  return emb.has_value();
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

}  // namespace

Graph decomposition_host(const Graph& m, int p, int t) {
  if (p < 1) throw GraphError("decomposition host: p must be at least 1");
  if (t < 1) throw GraphError("decomposition host: t must be at least 1");
  const long long order = static_cast<long long>(m.order()) + static_cast<long long>(p) * t;
  if (order > Graph::kWordOrder) {
    throw CapacityError("decomposition host has " + std::to_string(order) +
                        " vertices; containment is limited to 64");
  }
  const Graph side = disjoint_union(m, empty_graph(t));
  if (p == 1) return side;
  return join(side, turan_graph((p - 1) * t, p - 1));
}

int decomposition_parts(const Graph& l) { return chromatic_number(l) - 1; }

MembershipResult is_decomposition_member(const Graph& l, const Graph& m, int p, int t_max) {
  if (t_max < 1) throw GraphError("decomposition: t_max must be at least 1");
  const Pattern pattern(l, "L");
  MembershipResult r;
  if (!host_contains(m, pattern, p, t_max)) {
    r.reason = "no host with t <= " + std::to_string(t_max) + " contains L";
    return r;
  }
  for (int t = 1; t <= t_max; ++t) {
    if (host_contains(m, pattern, p, t, &r.embedding)) {
      r.t = t;
      break;
    }
  }
  for (const Edge& e : m.edges()) {
    Graph smaller = m;
    smaller.remove_edge(e.u, e.v);
    if (host_contains(smaller, pattern, p, t_max)) {
      r.reason = "not minimal: removing edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                 " keeps L";
      return r;
    }
  }
  for (Vertex v = 0; v < m.order(); ++v) {
    if (host_contains(m.without_vertex(v), pattern, p, t_max)) {
      r.reason = "not minimal: removing vertex " + std::to_string(v) + " keeps L";
      return r;
    }
  }
  r.member = true;
  return r;
}

DecompositionResult decomposition_family(const Graph& l, int m_max, std::optional<int> t_max, int threads) {
  if (m_max < 1) throw GraphError("decomposition: m_max must be at least 1");
  const int p = decomposition_parts(l);
  if (p < 2) throw GraphError("decomposition family needs a non-bipartite graph (chromatic number >= 3)");
  DecompositionResult r;
  r.p = p;
  r.m_max = m_max;
  r.t_max = t_max.value_or(l.order());
  if (r.t_max < 1) throw GraphError("decomposition: t_max must be at least 1");

  std::vector<Graph> candidates;
  for (int k = 2; k <= m_max; ++k) {
    enumerate_free_graphs(k, {}, [&](const Graph& g) {
      if (!has_isolated_vertex(g)) candidates.push_back(g);
    });
  }
  r.candidates = candidates.size();

  const Pattern pattern(l, "L");
  std::vector<char> hit(candidates.size(), 0);
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < candidates.size();) {
      hit[i] = host_contains(candidates[i], pattern, p, r.t_max) ? 1 : 0;
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::vector<Graph> members;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (hit[i]) members.push_back(candidates[i]);
  }
  r.hits = members.size();
  // Keep the members that contain no other member.
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < members.size() && minimal; ++j) {
      if (i == j) continue;
      const Graph& a = members[i];
      const Graph& b = members[j];
      if (b.order() > a.order() || b.edge_count() > a.edge_count()) continue;
      if (b.order() == a.order() && b.edge_count() == a.edge_count()) continue;
      if (contains(a, b)) minimal = false;
    }
    if (minimal) r.family.push_back(canonical_bytes(members[i]));
  }
  std::sort(r.family.begin(), r.family.end());
  return r;
}

}  // namespace oddprism
