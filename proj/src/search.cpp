#include "oddprism/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <set>
#include <thread>
#include <unordered_set>

#include "oddprism/canonical.hpp"
#include "oddprism/formulas.hpp"
#include "oddprism/graph6.hpp"

namespace oddprism {

namespace {

using Rows = std::array<std::uint64_t, 64>;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Node {
  int m = 0;
  std::int64_t e = 0;
  Rows rows{};
};

struct Tally {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::int64_t max = -1;
  std::set<std::string> extremal;
  std::optional<std::string> witness;
};

std::string rows_to_graph6(const Rows& rows, int n) {
  return to_graph6(Graph::from_rows64(n, std::span<const std::uint64_t>(rows.data(), n)));
}

// Image of a vertex set under a permutation.
std::uint64_t map_set(std::uint64_t s, const std::array<std::int8_t, 64>& g) {
  std::uint64_t out = 0;
  for (; s != 0; s &= s - 1) out |= bit(g[std::countr_zero(s)]);
  return out;
}

// True when s is the numerically smallest set in its orbit under the group
// generated by `gens`.
bool min_in_orbit(std::uint64_t s, const std::vector<std::array<std::int8_t, 64>>& gens,
                  std::vector<std::uint64_t>& scratch) {
  if (gens.empty()) return true;
  scratch.clear();
  scratch.push_back(s);
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    for (const auto& g : gens) {
      const std::uint64_t t = map_set(scratch[i], g);
      if (t < s) return false;
      if (std::find(scratch.begin(), scratch.end(), t) == scratch.end()) scratch.push_back(t);
    }
  }
  return true;
}

// Next subset of the same size (Gosper's hack), or 0 past `limit`.
std::uint64_t next_same_size(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

class Engine {
 public:
  using Visitor = std::function<void(const Graph&)>;

  Engine(const SearchConfig& cfg, bool bounded, const Visitor* visitor)
      : cfg_(cfg),
        n_(cfg.n),
        total_pairs_(binomial2(cfg.n)),
        bounded_(bounded),
        max_only_(cfg.mode == SearchMode::max_only),
        visitor_(visitor) {
    if (bounded_ && cfg.seed_lower_bound) {
      const std::int64_t k = *cfg.seed_lower_bound;
      bar_ = (max_only_ && cfg.seed_witness) ? k + 1 : k;
    }
  }

  void run(Tally& main, std::vector<Tally>& workers) {
    Node root;
    const int threads = std::max(1, cfg_.threads);
    if (n_ <= 2 || !bounded_) {
      dfs(root, main);
      return;
    }
    // Breadth-first to a frontier wide enough to share, then depth-first.
    std::vector<Node> frontier{root};
    const std::size_t wide = 32 * static_cast<std::size_t>(threads);
    while (frontier.front().m < n_ - 2 && frontier.size() < wide && !stop_) {
      std::vector<Node> next;
      for (const Node& node : frontier) {
        children(node, main, [&](const Node& c) { next.push_back(c); });
      }
      frontier = std::move(next);
      if (frontier.empty()) return;
    }
    workers.assign(threads, Tally{});
    std::atomic<std::size_t> cursor{0};
    auto work = [&](int id) {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= frontier.size() || stop_) break;
        dfs(frontier[i], workers[id]);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
  }

  bool stopped() const { return stop_; }
  std::uint64_t visited() const { return visited_; }

 private:
  void dfs(const Node& node, Tally& t) {
    if (stop_) return;
    if (node.m == n_) {
      record_class(node, t);
      return;
    }
    children(node, t, [&](const Node& c) { dfs(c, t); });
  }

  // Smallest edge count a graph on m vertices may have and still lead to a
  // final graph at or above the bar. Min-degree deletion never lowers
  // density, so e_m / C(m,2) >= e_n / C(n,2) along every canonical path.
  std::int64_t need(int m) const {
    const std::int64_t bar = bar_.load(std::memory_order_relaxed);
    if (!bounded_ || bar <= 0) return 0;
    if (m == n_) return bar;
    const std::int64_t pairs = binomial2(m);
    const std::int64_t by_density = (bar * pairs + total_pairs_ - 1) / total_pairs_;
    const std::int64_t by_pairs = bar - (total_pairs_ - pairs);
    return std::max(by_density, by_pairs);
  }

  void count_node(Tally& t) {
    ++t.nodes;
    const std::uint64_t v = visited_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (cfg_.node_budget && v >= *cfg_.node_budget) stop_ = true;
  }

  bool is_free(const Rows& rows, int m, int anchor) const {
    for (const Pattern& p : cfg_.forbidden) {
      if (match::contains_rows(rows.data(), m, p, anchor, nullptr)) return false;
    }
    return true;
  }

  template <class Emit>
  void children(const Node& parent, Tally& t, Emit&& emit) {
    const int m = parent.m;
    const int m1 = m + 1;

    int deg[64];
    int min_deg = 64;
    for (int u = 0; u < m; ++u) {
      deg[u] = std::popcount(parent.rows[u]);
      min_deg = std::min(min_deg, deg[u]);
    }
    // below[s]: vertices of degree < s.
    std::uint64_t below[66] = {};
    for (int s = 1; s <= m + 1; ++s) {
      below[s] = below[s - 1];
      for (int u = 0; u < m; ++u) {
        if (deg[u] == s - 1) below[s] |= bit(u);
      }
    }

    std::vector<std::array<std::int8_t, 64>> gens;
    if (m >= 2) {
      canon::Labeling lab;
      canon::canonical_labeling(parent.rows.data(), m, lab);
      gens = std::move(lab.automorphisms);
    }
    std::vector<std::uint64_t> scratch;
    std::unordered_set<std::string> seen;

    const int s_max = m == 0 ? 0 : std::min(m, min_deg + 1);
    for (int s = 0; s <= s_max; ++s) {
      if (stop_) return;
      if (parent.e + s < need(m1)) {
        t.pruned += static_cast<std::uint64_t>(binomial_small(m, s));
        continue;
      }
      const std::uint64_t limit = bit(m);
      std::uint64_t S = s == 0 ? 0 : bit(s) - 1;
      for (;;) {
        if (try_subset(parent, S, s, below, gens, scratch, seen, t, emit)) return;
        if (s == 0) break;
        S = next_same_size(S);
        if (S >= limit) break;
      }
    }
  }

  // Returns true when the search must stop.
  template <class Emit>
  bool try_subset(const Node& parent, std::uint64_t S, int s, const std::uint64_t* below,
                  const std::vector<std::array<std::int8_t, 64>>& gens, std::vector<std::uint64_t>& scratch,
                  std::unordered_set<std::string>& seen, Tally& t, Emit& emit) {
    const int m = parent.m;
    const int m1 = m + 1;
    // The new vertex must have minimum degree in the child.
    if ((below[s] & ~S) != 0) return false;
    if (s >= 2 && (below[s - 1] & S) != 0) return false;
    if (!min_in_orbit(S, gens, scratch)) return false;

    Node child;
    child.m = m1;
    child.e = parent.e + s;
    child.rows = parent.rows;
    for (std::uint64_t x = S; x != 0; x &= x - 1) child.rows[std::countr_zero(x)] |= bit(m);
    child.rows[m] = S;

    count_node(t);
    if (stop_) return true;
    if (!is_free(child.rows, m1, m)) return false;
    if (m1 == n_ && bounded_) {
      record_final(child, t);
      return false;
    }
    if (!accept(child, s, seen)) return false;
    emit(child);
    return stop_;
  }

  static std::int64_t binomial_small(int m, int s) {
    std::int64_t r = 1;
    for (int i = 0; i < s; ++i) r = r * (m - i) / (i + 1);
    return r;
  }

  // Canonical augmentation test: the new vertex m must lie in the orbit of
  // the canonically chosen minimum-degree vertex, and isomorphic siblings
  // are kept once.
  bool accept(const Node& child, int s, std::unordered_set<std::string>& seen) {
    const int m1 = child.m;
    const int v = m1 - 1;
    std::uint64_t mins = 0;
    for (int u = 0; u < m1; ++u) {
      if (std::popcount(child.rows[u]) == s) mins |= bit(u);
    }
    canon::Labeling lab;
    canon::canonical_labeling(child.rows.data(), m1, lab);
    if (mins != bit(v)) {
      int pos[64];
      for (int i = 0; i < m1; ++i) pos[lab.lab[i]] = i;
      int w = -1;
      for (std::uint64_t x = mins; x != 0; x &= x - 1) {
        const int u = std::countr_zero(x);
        if (w < 0 || pos[u] > pos[w]) w = u;
      }
      if (w != v) {
        const auto rep = canon::orbits(m1, lab.automorphisms);
        if (rep[w] != rep[v]) return false;
      }
    }
    Rows code{};
    canon::permuted_rows(child.rows.data(), m1, lab.lab.data(), code.data());
    std::string key(reinterpret_cast<const char*>(code.data()), sizeof(std::uint64_t) * m1);
    return seen.insert(std::move(key)).second;
  }

  void raise_bar(std::int64_t e) {
    const std::int64_t target = max_only_ ? e + 1 : e;
    std::int64_t cur = bar_.load(std::memory_order_relaxed);
    while (cur < target && !bar_.compare_exchange_weak(cur, target, std::memory_order_relaxed)) {
    }
  }

  void record_final(const Node& g, Tally& t) {
    if (g.e < bar_.load(std::memory_order_relaxed)) return;
    raise_bar(g.e);
    if (g.e > t.max) {
      t.max = g.e;
      t.extremal.clear();
      t.witness.reset();
    }
    if (g.e < t.max) return;
    if (!max_only_) {
      const std::string bytes = canonical_bytes(Graph::from_rows64(
          g.m, std::span<const std::uint64_t>(g.rows.data(), g.m)));
      t.extremal.insert(bytes);
      if (!t.witness) t.witness = bytes;
    } else if (!t.witness) {
      t.witness = rows_to_graph6(g.rows, g.m);
    }
  }

  void record_class(const Node& g, Tally& t) {
    if (visitor_) {
      (*visitor_)(Graph::from_rows64(g.m, std::span<const std::uint64_t>(g.rows.data(), g.m)));
    }
    ++classes_;
    if (bounded_) record_final(g, t);
  }

 public:
  std::uint64_t classes() const { return classes_; }

 private:
  const SearchConfig& cfg_;
  int n_;
  std::int64_t total_pairs_;
  bool bounded_;
  bool max_only_;
  const Visitor* visitor_;
  std::atomic<std::int64_t> bar_{0};
  std::atomic<std::uint64_t> visited_{0};
  std::atomic<bool> stop_{false};
  std::uint64_t classes_ = 0;
};

void check_order(int n, bool allow_large) {
  if (n < 0) throw GraphError("search: order must be non-negative");
  if (n > Graph::kWordOrder) throw CapacityError("search: order must be <= 64");
  if (n > kFeasibleOrder && !allow_large) {
    throw CapacityError("search: n = " + std::to_string(n) + " is above the feasibility guard (" +
                        std::to_string(kFeasibleOrder) + "); pass the override to run anyway");
  }
}

SearchResult merge(const SearchConfig& cfg, Tally& main, std::vector<Tally>& workers) {
  SearchResult r;
  r.n = cfg.n;
  workers.push_back(std::move(main));
  for (const Tally& t : workers) {
    r.nodes_explored += t.nodes;
    r.pruned_by_bound += t.pruned;
    r.max_edges = std::max(r.max_edges, t.max);
  }
  std::set<std::string> all;
  std::optional<std::string> witness;
  for (Tally& t : workers) {
    if (t.max != r.max_edges || t.max < 0) continue;
    all.insert(t.extremal.begin(), t.extremal.end());
    if (t.witness && (!witness || *t.witness < *witness)) witness = t.witness;
  }
  r.extremal.assign(all.begin(), all.end());
  if (!r.extremal.empty()) witness = r.extremal.front();
  r.witness = witness;
  return r;
}

}  // namespace

SearchResult turan_exact(const SearchConfig& config) {
  check_order(config.n, config.allow_large);
  if (config.seed_witness) {
    if (config.seed_witness->order() != config.n) throw GraphError("search: seed witness has wrong order");
    if (!is_free(*config.seed_witness, config.forbidden)) {
      throw GraphError("search: seed witness contains a forbidden pattern");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  SearchConfig cfg = config;
  if (cfg.seed_witness) {
    cfg.seed_lower_bound = static_cast<std::int64_t>(cfg.seed_witness->edge_count());
  }

  Tally main;
  std::vector<Tally> workers;
  Engine engine(cfg, true, nullptr);
  engine.run(main, workers);
  SearchResult r = merge(cfg, main, workers);
  r.seed_used = cfg.seed_lower_bound;
  r.exhaustive = !engine.stopped();

  if (cfg.seed_witness && r.max_edges < *cfg.seed_lower_bound) {
    // Max-only mode prunes ties with a witnessed seed; the seed graph is the
    // answer when nothing beats it.
    r.max_edges = *cfg.seed_lower_bound;
    r.witness = to_graph6(*cfg.seed_witness);
    if (cfg.mode == SearchMode::enumerate_extremal) {
      r.extremal = {canonical_bytes(*cfg.seed_witness)};
    }
  } else if (!cfg.seed_witness && cfg.seed_lower_bound && r.max_edges < 0 && r.exhaustive) {
    // The unverified seed was too optimistic.
    SearchConfig unseeded = config;
    unseeded.seed_lower_bound.reset();
    SearchResult again = turan_exact(unseeded);
    again.nodes_explored += r.nodes_explored;
    again.pruned_by_bound += r.pruned_by_bound;
    again.seed_used = config.seed_lower_bound;
    r = std::move(again);
  }
  r.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::uint64_t enumerate_free_graphs(int n, std::span<const Pattern> forbidden,
                                    const std::function<void(const Graph&)>& visit,
                                    std::optional<std::uint64_t> node_budget, bool allow_large) {
  check_order(n, allow_large);
  SearchConfig cfg;
  cfg.n = n;
  cfg.forbidden.assign(forbidden.begin(), forbidden.end());
  cfg.node_budget = node_budget;
  cfg.mode = SearchMode::enumerate_extremal;
  Tally main;
  std::vector<Tally> workers;
  Engine engine(cfg, false, &visit);
  engine.run(main, workers);
  if (engine.stopped()) throw CapacityError("enumerate_free_graphs: node budget exhausted");
  return engine.classes();
}

std::vector<ConstructionSpec> seed_pool(int n) {
  std::vector<ConstructionSpec> pool;
  pool.push_back({"empty", {n}});
  pool.push_back({"complete", {n}});
  for (int r = 2; r < n; ++r) pool.push_back({"turan", {n, r}});
  for (int i = 0; i <= n; i += 3) pool.push_back({"H", {n, i}});
  for (int i = 1; i <= n; ++i) {
    if (i % 3 == 0) continue;
    for (const auto& spec : f_family(n, i)) pool.push_back(spec);
  }
  for (int na = 0; na <= n; ++na) {
    const int members = p4_extremal_count(na);
    for (int v = 0; v < members; ++v) pool.push_back({"main_extremal", {n, na, v}});
  }
  const int p4_members = p4_extremal_count(n);
  for (int v = 0; v < p4_members; ++v) pool.push_back({"p4_extremal", {n, v}});
  for (int k = 2; k <= n + 1; ++k) {
    for (int v = 0; v < path_extremal_count(n, k); ++v) pool.push_back({"path_extremal", {n, k, v}});
  }
  if (n >= 8) pool.push_back({"H3", {n}});
  if (n >= 6) pool.push_back({"H4", {n}});
  if (n == 6) pool.push_back({"G1", {}});
  if (n == 7) pool.push_back({"G2", {}});
  if (n == 8) pool.push_back({"G3", {}});
  return pool;
}

std::optional<SeedWitness> construction_seed(int n, std::span<const Pattern> forbidden) {
  if (n > Graph::kWordOrder) return std::nullopt;
  std::optional<SeedWitness> best;
  for (const ConstructionSpec& spec : seed_pool(n)) {
    Graph g = build(spec);
    const auto e = static_cast<std::int64_t>(g.edge_count());
    if (best && e <= best->edges) continue;
    if (!is_free(g, forbidden)) continue;
    best = SeedWitness{e, spec, std::move(g)};
  }
  return best;
}

FixedBodyResult max_supergraph_over_fixed_body(const Graph& body, std::span<const Edge> optional_edges,
                                               const Pattern& forbidden) {
  if (optional_edges.size() > 24) throw CapacityError("fixed-body search: at most 24 optional edges");
  for (const Edge& e : optional_edges) {
    if (body.has_edge(e.u, e.v)) throw GraphError("fixed-body search: optional edge already in body");
  }
  FixedBodyResult r;
  std::set<std::string> classes;
  const std::uint64_t count = std::uint64_t{1} << optional_edges.size();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Graph g = body;
    for (std::size_t i = 0; i < optional_edges.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(optional_edges[i].u, optional_edges[i].v);
    }
    if (contains(g, forbidden)) continue;
    const auto e = static_cast<std::int64_t>(g.edge_count());
    if (e > r.max_edges) {
      r.max_edges = e;
      masks.clear();
      classes.clear();
    }
    if (e == r.max_edges) {
      masks.push_back(mask);
      classes.insert(canonical_bytes(g));
    }
  }
  if (r.max_edges >= 0) r.max_added = static_cast<int>(r.max_edges - static_cast<std::int64_t>(body.edge_count()));
  for (std::uint64_t mask : masks) {
    std::vector<Edge> subset;
    for (std::size_t i = 0; i < optional_edges.size(); ++i) {
      if ((mask >> i) & 1U) subset.push_back(optional_edges[i]);
    }
    r.maximizing_subsets.push_back(std::move(subset));
  }
  std::sort(r.maximizing_subsets.begin(), r.maximizing_subsets.end());
  r.extremal.assign(classes.begin(), classes.end());
  return r;
}

}  // namespace oddprism
