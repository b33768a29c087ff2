#include "oddprism/containment.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "oddprism/canonical.hpp"
#include "oddprism/constructions.hpp"

namespace oddprism {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t all_of(int n) { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

// Greedy connectivity-first order starting at `start`: repeatedly take the
// vertex with most already-placed neighbours, then highest degree.
std::vector<Vertex> order_from(const Graph& g, Vertex start) {
  const int n = g.order();
  std::vector<Vertex> order{start};
  std::vector<char> placed(n, 0);
  placed[start] = 1;
  while (static_cast<int>(order.size()) < n) {
    int pick = -1;
    int pick_links = -1;
    int pick_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (Vertex u : order) links += g.has_edge(u, v) ? 1 : 0;
      const int d = g.degree(v);
      if (links > pick_links || (links == pick_links && d > pick_deg)) {
        pick = v;
        pick_links = links;
        pick_deg = d;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }
  return order;
}

const std::string& p4_bytes() {
  static const std::string b = canonical_bytes(path(4));
  return b;
}

const Graph& prism1_graph() {
  static const Graph g = prism(1);
  return g;
}

const std::string& prism1_bytes() {
  static const std::string b = canonical_bytes(prism1_graph());
  return b;
}

class Matcher {
 public:
  Matcher(const std::uint64_t* rows, int n, bool break_twins) : rows_(rows), n_(n) {
    int deg[64];
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(rows[v]);
    for (int d = 0; d <= 64; ++d) ge_[d] = 0;
    for (int v = 0; v < n; ++v) {
      for (int d = 0; d <= deg[v]; ++d) ge_[d] |= bit(v);
    }
    std::iota(order_, order_ + n, 0);
    std::stable_sort(order_, order_ + n, [&](int a, int b) { return deg[a] < deg[b]; });
    for (int v = 0; v < n; ++v) lower_twins_[v] = 0;
    if (break_twins) {
      for (int v = 0; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          const bool open_twin = rows[u] == rows[v];
          const bool closed_twin = (rows[u] | bit(u)) == (rows[v] | bit(v));
          if (open_twin || closed_twin) lower_twins_[v] |= bit(u);
        }
      }
    }
  }

  // Depth-first extension of steps[i..]; `visit` sees each full embedding
  // and returns true to stop.
  template <class Visit>
  bool extend(const std::vector<Pattern::Step>& steps, std::size_t i, Visit&& visit) {
    if (i == steps.size()) return visit(img_);
    const Pattern::Step& s = steps[i];
    std::uint64_t cand = all_of(n_) & ~used_ & ge_[std::min(s.degree, 64)];
    for (std::uint64_t m = s.earlier_neighbors; m != 0 && cand != 0; m &= m - 1) {
      cand &= rows_[img_[steps[std::countr_zero(m)].vertex]];
    }
    if (cand == 0) return false;
    for (int k = 0; k < n_; ++k) {
      const int v = order_[k];
      if (!((cand >> v) & 1U)) continue;
      // Interchangeable unused twins: only the lowest one is tried.
      if (lower_twins_[v] & ~used_) continue;
      img_[s.vertex] = v;
      used_ |= bit(v);
      const bool stop = extend(steps, i + 1, visit);
      used_ &= ~bit(v);
      if (stop) return true;
    }
    return false;
  }

  void fix(Vertex p, int v) {
    img_[p] = v;
    used_ |= bit(v);
  }
  void reset() { used_ = 0; }
  const int* image() const { return img_; }

 private:
  const std::uint64_t* rows_;
  int n_;
  std::uint64_t ge_[65];
  int order_[64];
  std::uint64_t lower_twins_[64];
  int img_[64] = {};
  std::uint64_t used_ = 0;
};

Embedding to_embedding(const int* img, int k) { return Embedding(img, img + k); }

void require_word_host(const Graph& host) {
  if (host.order() > Graph::kWordOrder) {
    throw CapacityError("containment requires host order <= 64");
  }
}

}  // namespace

Pattern::Pattern(Graph g, std::string name) : graph_(std::move(g)), name_(std::move(name)) {
  if (graph_.order() > Graph::kWordOrder) throw CapacityError("pattern order must be <= 64");
  const int k = graph_.order();
  degrees_ = graph_.degrees();
  orders_.resize(k);
  steps_.resize(k);
  for (Vertex s = 0; s < k; ++s) {
    orders_[s] = order_from(graph_, s);
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[orders_[s][i]] = i;
    for (int i = 0; i < k; ++i) {
      const Vertex v = orders_[s][i];
      std::uint64_t earlier = 0;
      for (Vertex u : graph_.neighbors(v)) {
        if (pos[u] < i) earlier |= bit(pos[u]);
      }
      steps_[s].push_back({v, degrees_[v], earlier});
    }
  }
  if (k > 0) {
    start_ = static_cast<Vertex>(std::max_element(degrees_.begin(), degrees_.end()) - degrees_.begin());
    const auto gens = automorphism_generators(graph_);
    std::vector<std::array<std::int8_t, 64>> packed;
    for (const auto& p : gens) {
      std::array<std::int8_t, 64> a{};
      for (int i = 0; i < k; ++i) a[i] = static_cast<std::int8_t>(p[i]);
      packed.push_back(a);
    }
    const auto rep = canon::orbits(k, packed);
    for (Vertex v = 0; v < k; ++v) {
      if (rep[v] == v) orbit_reps_.push_back(v);
    }
    const std::string bytes = canonical_bytes(graph_);
    if (bytes == p4_bytes()) kind_ = Kind::p4;
    if (bytes == prism1_bytes()) kind_ = Kind::prism1;
  }
}

namespace match {

bool contains_rows(const std::uint64_t* rows, int n, const Pattern& pattern, int anchor,
                   Embedding* witness) {
  const int k = pattern.order();
  if (k == 0) {
    if (witness) witness->clear();
    return anchor < 0;
  }
  if (k > n) return false;
  if (!witness) {
    if (pattern.kind() == Pattern::Kind::p4) return p4_in_rows(rows, n, anchor);
    if (pattern.kind() == Pattern::Kind::prism1) return prism1_in_rows(rows, n, anchor, nullptr);
  }
  Matcher m(rows, n, true);
  auto found = [&](const int* img) {
    if (witness) *witness = to_embedding(img, k);
    return true;
  };
  if (anchor < 0) return m.extend(pattern.steps(), 0, found);

  const int anchor_deg = std::popcount(rows[anchor]);
  for (Vertex p : pattern.orbit_representatives()) {
    if (pattern.degrees()[p] > anchor_deg) continue;
    m.reset();
    m.fix(p, anchor);
    if (m.extend(pattern.steps_from(p), 1, found)) return true;
  }
  return false;
}

bool p4_in_rows(const std::uint64_t* rows, int n, int anchor) {
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t m = rows[u] & ~(bit(u + 1) - 1); m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint64_t a = rows[u] & ~bit(v);
      const std::uint64_t b = rows[v] & ~bit(u);
      if (a == 0 || b == 0 || std::popcount(a | b) < 2) continue;
      if (anchor < 0 || anchor == u || anchor == v) return true;
      if (((a >> anchor) & 1U) && (b & ~bit(anchor))) return true;
      if (((b >> anchor) & 1U) && (a & ~bit(anchor))) return true;
    }
  }
  return false;
}

bool prism1_in_rows(const std::uint64_t* rows, int n, int anchor, Embedding* witness) {
  std::vector<std::array<int, 3>> tris;
  for (int a = 0; a < n; ++a) {
    for (std::uint64_t mb = rows[a] & ~(bit(a + 1) - 1); mb != 0; mb &= mb - 1) {
      const int b = std::countr_zero(mb);
      for (std::uint64_t mc = rows[a] & rows[b] & ~(bit(b + 1) - 1); mc != 0; mc &= mc - 1) {
        tris.push_back({a, b, std::countr_zero(mc)});
      }
    }
  }
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                      {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t1 = tris[i];
    const bool t1_anchored = anchor < 0 || t1[0] == anchor || t1[1] == anchor || t1[2] == anchor;
    if (!t1_anchored) continue;
    const std::uint64_t m1 = bit(t1[0]) | bit(t1[1]) | bit(t1[2]);
    for (std::size_t j = anchor < 0 ? i + 1 : 0; j < tris.size(); ++j) {
      const auto& t2 = tris[j];
      const std::uint64_t m2 = bit(t2[0]) | bit(t2[1]) | bit(t2[2]);
      if (m1 & m2) continue;
      for (const auto& p : perms) {
        if (((rows[t1[0]] >> t2[p[0]]) & 1U) && ((rows[t1[1]] >> t2[p[1]]) & 1U) &&
            ((rows[t1[2]] >> t2[p[2]]) & 1U)) {
          if (witness) {
            // prism(1) labels (a, b) as 2a + b.
            witness->assign(6, 0);
            for (int a = 0; a < 3; ++a) {
              (*witness)[2 * a] = t1[a];
              (*witness)[2 * a + 1] = t2[p[a]];
            }
          }
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace match

std::optional<Embedding> contains(const Graph& host, const Pattern& pattern) {
  require_word_host(host);
  const auto rows = host.rows64();
  Embedding emb;
  if (match::contains_rows(rows.data(), host.order(), pattern, -1, &emb)) return emb;
  return std::nullopt;
}

std::optional<Embedding> contains(const Graph& host, const Graph& pattern) {
  return contains(host, Pattern(pattern));
}

std::optional<Embedding> contains_through(const Graph& host, const Pattern& pattern, Vertex anchor) {
  require_word_host(host);
  if (anchor < 0 || anchor >= host.order()) throw GraphError("contains_through: anchor out of range");
  const auto rows = host.rows64();
  Embedding emb;
  if (match::contains_rows(rows.data(), host.order(), pattern, anchor, &emb)) return emb;
  return std::nullopt;
}

std::size_t for_each_embedding(const Graph& host, const Pattern& pattern,
                               const std::function<bool(const Embedding&)>& visit) {
  require_word_host(host);
  const int k = pattern.order();
  if (k > host.order()) return 0;
  const auto rows = host.rows64();
  Matcher m(rows.data(), host.order(), false);
  std::size_t count = 0;
  m.extend(pattern.steps(), 0, [&](const int* img) {
    ++count;
    return !visit(to_embedding(img, k));
  });
  return count;
}

bool is_p4_free(const Graph& g) {
  if (g.order() > Graph::kWordOrder) {
    // A graph has no P_4 exactly when every component is a star or a triangle.
    const int n = g.order();
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> comp{s};
      seen[s] = 1;
      std::size_t degree_sum = 0;
      int max_degree = 0;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const int d = g.degree(comp[i]);
        degree_sum += static_cast<std::size_t>(d);
        max_degree = std::max(max_degree, d);
        for (Vertex w : g.neighbors(comp[i])) {
          if (!seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
        }
      }
      const int c = static_cast<int>(comp.size());
      const bool star = max_degree == c - 1 && degree_sum == 2 * static_cast<std::size_t>(c - 1);
      const bool triangle = c == 3 && degree_sum == 6;
      if (!star && !triangle) return false;
    }
    return true;
  }
  const auto rows = g.rows64();
  return !match::p4_in_rows(rows.data(), g.order(), -1);
}

bool prism_free(const Graph& g, int k) { return !find_prism(g, k).has_value(); }

std::optional<Embedding> find_prism(const Graph& g, int k) {
  if (k < 1) throw GraphError("prism parameter k must be at least 1");
  require_word_host(g);
  if (k == 1) {
    const auto rows = g.rows64();
    Embedding emb;
    if (match::prism1_in_rows(rows.data(), g.order(), -1, &emb)) return emb;
    return std::nullopt;
  }
  return contains(g, Pattern(prism(k)));
}

bool is_free(const Graph& host, std::span<const Pattern> patterns) {
  require_word_host(host);
  const auto rows = host.rows64();
  for (const Pattern& p : patterns) {
    if (match::contains_rows(rows.data(), host.order(), p, -1, nullptr)) return false;
  }
  return true;
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& emb) {
  if (emb.size() != static_cast<std::size_t>(pattern.order())) return false;
  std::vector<char> seen(host.order(), 0);
  for (Vertex v : emb) {
    if (v < 0 || v >= host.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (const Edge& e : pattern.edges()) {
    if (!host.has_edge(emb[e.u], emb[e.v])) return false;
  }
  return true;
}

}  // namespace oddprism
