#include "oddprism/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace oddprism {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  if (n > kMaxOrder) {
    throw CapacityError("graph order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxOrder));
  }
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(n_) + ")");
  }
}

void Graph::check_pair(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (word(u, v) >> (v & 63)) & 1U;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if ((word(u, v) >> (v & 63)) & 1U) return;
  word(u, v) |= std::uint64_t{1} << (v & 63);
  word(v, u) |= std::uint64_t{1} << (u & 63);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!((word(u, v) >> (v & 63)) & 1U)) return;
  word(u, v) &= ~(std::uint64_t{1} << (v & 63));
  word(v, u) &= ~(std::uint64_t{1} << (u & 63));
  --edges_;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  const std::size_t base = static_cast<std::size_t>(v) * words_;
  for (int w = 0; w < words_; ++w) d += std::popcount(bits_[base + w]);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  const std::size_t base = static_cast<std::size_t>(v) * words_;
  for (int w = 0; w < words_; ++w) {
    for (std::uint64_t m = bits_[base + w]; m != 0; m &= m - 1) {
      out.push_back(w * 64 + std::countr_zero(m));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::uint64_t Graph::row64(Vertex v) const {
  check_vertex(v);
  if (n_ > kWordOrder) throw CapacityError("row64 requires order <= 64");
  return bits_[v];
}

std::vector<std::uint64_t> Graph::rows64() const {
  if (n_ > kWordOrder) throw CapacityError("rows64 requires order <= 64");
  return bits_;
}

Graph Graph::from_rows64(int n, std::span<const std::uint64_t> rows) {
  if (n > kWordOrder) throw CapacityError("from_rows64 requires order <= 64");
  if (rows.size() < static_cast<std::size_t>(n)) {
    throw GraphError("from_rows64: too few rows");
  }
  Graph g(n);
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::size_t twice = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t r = rows[v] & mask;
    if ((r >> v) & 1U) throw GraphError("from_rows64: loop");
    g.bits_[v] = r;
    twice += std::popcount(r);
  }
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t m = g.bits_[u]; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (!((g.bits_[v] >> u) & 1U)) throw GraphError("from_rows64: asymmetric rows");
    }
  }
  g.edges_ = twice / 2;
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw GraphError("relabeled: permutation size mismatch");
  }
  std::vector<char> seen(n_, 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw GraphError("relabeled: not a permutation");
    seen[p] = 1;
  }
  Graph out(n_);
  for (const Edge& e : edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

Graph Graph::without_vertex(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> keep;
  keep.reserve(n_ - 1);
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

namespace {

int checked_sum(int a, int b, const char* what) {
  const long long total = static_cast<long long>(a) + b;
  if (total > Graph::kMaxOrder) {
    throw CapacityError(std::string(what) + ": combined order " + std::to_string(total) +
                        " exceeds cap " + std::to_string(Graph::kMaxOrder));
  }
  return static_cast<int>(total);
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph out(checked_sum(g1.order(), g2.order(), "disjoint_union"));
  const int shift = g1.order();
  for (const Edge& e : g1.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) out.add_edge(e.u + shift, e.v + shift);
  return out;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph out = disjoint_union(g1, g2);
  const int shift = g1.order();
  for (int u = 0; u < g1.order(); ++u) {
    for (int v = 0; v < g2.order(); ++v) out.add_edge(u, v + shift);
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const long long total = static_cast<long long>(g.order()) * h.order();
  if (total > Graph::kMaxOrder) {
    throw CapacityError("cartesian_product: order " + std::to_string(total) +
                        " exceeds cap " + std::to_string(Graph::kMaxOrder));
  }
  const int m = h.order();
  Graph out(static_cast<int>(total));
  for (int a = 0; a < g.order(); ++a) {
    for (const Edge& e : h.edges()) out.add_edge(a * m + e.u, a * m + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (int b = 0; b < m; ++b) out.add_edge(e.u * m + b, e.v * m + b);
  }
  return out;
}

namespace {

void require_exact_cap(const Graph& g, const char* what) {
  if (g.order() > kExactStatsCap) {
    throw CapacityError(std::string(what) + " is exact only for n <= " +
                        std::to_string(kExactStatsCap));
  }
}

// Maximum independent set size among `candidates`, branching on the
// highest-degree candidate (take it or drop it).
int mis(const std::vector<std::uint64_t>& rows, std::uint64_t candidates, int current,
        int& best) {
  if (candidates == 0) {
    best = std::max(best, current);
    return best;
  }
  if (current + std::popcount(candidates) <= best) return best;
  int pick = -1;
  int pick_deg = -1;
  for (std::uint64_t m = candidates; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    const int d = std::popcount(rows[v] & candidates);
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  if (pick_deg == 0) {
    best = std::max(best, current + std::popcount(candidates));
    return best;
  }
  const std::uint64_t bit = std::uint64_t{1} << pick;
  mis(rows, candidates & ~bit & ~rows[pick], current + 1, best);
  mis(rows, candidates & ~bit, current, best);
  return best;
}

bool colorable(const std::vector<std::uint64_t>& rows, const std::vector<int>& order,
               std::size_t idx, int k, int used, std::vector<int>& color) {
  if (idx == order.size()) return true;
  const int v = order[idx];
  std::uint64_t forbidden = 0;
  for (std::uint64_t m = rows[v]; m != 0; m &= m - 1) {
    const int u = std::countr_zero(m);
    if (color[u] >= 0) forbidden |= std::uint64_t{1} << color[u];
  }
  // A fresh colour is interchangeable with any other unused one.
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((forbidden >> c) & 1U) continue;
    color[v] = c;
    if (colorable(rows, order, idx + 1, k, std::max(used, c + 1), color)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int independence_number(const Graph& g) {
  require_exact_cap(g, "independence_number");
  if (g.order() == 0) return 0;
  const auto rows = g.rows64();
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.order()) - 1);
  int best = 0;
  return mis(rows, all, 0, best);
}

int chromatic_number(const Graph& g) {
  require_exact_cap(g, "chromatic_number");
  const int n = g.order();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  if (is_bipartite(g)) return 2;
  const auto rows = g.rows64();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(rows[a]) > std::popcount(rows[b]);
  });
  for (int k = 3; k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (colorable(rows, order, 0, k, 0, color)) return k;
  }
  return n;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

BasicStats basic_stats(const Graph& g) {
  BasicStats s;
  s.degrees = g.degrees();
  s.min_degree = s.degrees.empty() ? 0 : *std::min_element(s.degrees.begin(), s.degrees.end());
  s.independence_number = independence_number(g);
  s.chromatic_number = chromatic_number(g);
  return s;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " e=" << g.edge_count() << " {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ' ';
    os << e.u << '-' << e.v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace oddprism
