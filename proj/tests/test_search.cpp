#include <doctest.h>

#include <set>

#include "oddprism/canonical.hpp"
#include "oddprism/constructions.hpp"
#include "oddprism/graph6.hpp"
#include "oddprism/search.hpp"
#include "oracles.hpp"

using namespace oddprism;

namespace {

SearchConfig config(int n, const std::vector<Graph>& patterns, SearchMode mode, int threads = 1) {
  SearchConfig c;
  c.n = n;
  for (const Graph& p : patterns) c.forbidden.emplace_back(p);
  c.mode = mode;
  c.threads = threads;
  return c;
}

std::set<std::string> oracle_classes(int n, const std::vector<Graph>& patterns, long long edges = -1) {
  std::set<std::string> out;
  oracle::for_each_labelled(n, [&](const Graph& g) {
    if (edges >= 0 && static_cast<long long>(g.edge_count()) != edges) return;
    for (const Graph& p : patterns) {
      if (oracle::contains(g, p)) return;
    }
    out.insert(canonical_bytes(g));
  });
  return out;
}

std::vector<std::vector<Graph>> pattern_sets() {
  return {{path(4)}, {cycle(3)}, {path_power(6, 2)}, {prism(1)}, {cycle(4)}, {cycle(3), cycle(4)}, {star(3)},
          {path(3)}};
}

}  // namespace

TEST_CASE("isomorphism class counts without patterns") {
  const std::uint64_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> seen;
    std::uint64_t visits = 0;
    const std::uint64_t count = enumerate_free_graphs(n, {}, [&](const Graph& g) {
      ++visits;
      seen.insert(canonical_bytes(g));
    });
    CAPTURE(n);
    CHECK(count == expected[n]);
    CHECK(visits == expected[n]);
    CHECK(seen.size() == expected[n]);
  }
}

TEST_CASE("free-graph enumeration matches the oracle classes") {
  for (const auto& patterns : pattern_sets()) {
    std::vector<Pattern> prepared;
    for (const Graph& p : patterns) prepared.emplace_back(p);
    for (int n = 0; n <= 6; ++n) {
      std::set<std::string> ours;
      enumerate_free_graphs(n, prepared, [&](const Graph& g) { ours.insert(canonical_bytes(g)); });
      CAPTURE(n);
      CHECK(ours == oracle_classes(n, patterns));
    }
  }
}

TEST_CASE("exact Turan numbers and extremal sets match the oracle up to 6 vertices") {
  for (const auto& patterns : pattern_sets()) {
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(n);
      const long long ex = oracle::turan(n, patterns);
      const SearchResult max_only = turan_exact(config(n, patterns, SearchMode::max_only));
      CHECK(max_only.max_edges == ex);
      CHECK(max_only.exhaustive);
      REQUIRE(max_only.witness.has_value());
      const Graph w = from_graph6(*max_only.witness);
      CHECK(static_cast<long long>(w.edge_count()) == ex);
      for (const Graph& p : patterns) CHECK_FALSE(oracle::contains(w, p));

      const SearchResult all = turan_exact(config(n, patterns, SearchMode::enumerate_extremal));
      CHECK(all.max_edges == ex);
      const auto expected = oracle_classes(n, patterns, ex);
      CHECK(std::set<std::string>(all.extremal.begin(), all.extremal.end()) == expected);
      CHECK(all.extremal.size() == expected.size());
      CHECK(std::is_sorted(all.extremal.begin(), all.extremal.end()));
    }
  }
}

TEST_CASE("P4 on four vertices") {
  const SearchResult r = turan_exact(config(4, {path(4)}, SearchMode::enumerate_extremal));
  CHECK(r.max_edges == 3);
  const std::set<std::string> expected{canonical_bytes(disjoint_union(complete_graph(3), Graph(1))),
                                       canonical_bytes(star(3))};
  CHECK(std::set<std::string>(r.extremal.begin(), r.extremal.end()) == expected);
}

TEST_CASE("seeded and unseeded searches agree") {
  for (int n = 5; n <= 8; ++n) {
    CAPTURE(n);
    const SearchResult plain = turan_exact(config(n, {prism(1)}, SearchMode::enumerate_extremal));
    SearchConfig numeric = config(n, {prism(1)}, SearchMode::enumerate_extremal);
    numeric.seed_lower_bound = plain.max_edges;
    const SearchResult a = turan_exact(numeric);
    CHECK(a.max_edges == plain.max_edges);
    CHECK(a.extremal == plain.extremal);

    // an unreachable numeric seed falls back to the unseeded answer
    SearchConfig too_high = config(n, {prism(1)}, SearchMode::max_only);
    too_high.seed_lower_bound = plain.max_edges + 1;
    CHECK(turan_exact(too_high).max_edges == plain.max_edges);

    const std::vector<Pattern> forbidden{Pattern(prism(1))};
    const auto seed = construction_seed(n, forbidden);
    REQUIRE(seed.has_value());
    SearchConfig witnessed = config(n, {prism(1)}, SearchMode::enumerate_extremal);
    witnessed.seed_lower_bound = seed->edges;
    witnessed.seed_witness = seed->graph;
    const SearchResult b = turan_exact(witnessed);
    CHECK(b.max_edges == plain.max_edges);
    CHECK(b.extremal == plain.extremal);
    SearchConfig witnessed_max = witnessed;
    witnessed_max.mode = SearchMode::max_only;
    CHECK(turan_exact(witnessed_max).max_edges == plain.max_edges);
  }
}

TEST_CASE("seeded enumeration matches the unseeded one beyond the guard") {
  for (int n = 9; n <= 11; ++n) {
    CAPTURE(n);
    SearchConfig plain = config(n, {prism(1)}, SearchMode::enumerate_extremal);
    plain.allow_large = true;
    const SearchResult a = turan_exact(plain);
    const std::vector<Pattern> forbidden{Pattern(prism(1))};
    SearchConfig seeded = plain;
    seeded.seed_witness = construction_seed(n, forbidden)->graph;
    const SearchResult b = turan_exact(seeded);
    CHECK(a.max_edges == b.max_edges);
    CHECK(a.extremal == b.extremal);
  }
}

TEST_CASE("results do not depend on the worker count") {
  for (int threads : {1, 2, 4}) {
    CAPTURE(threads);
    const SearchResult a = turan_exact(config(8, {prism(1)}, SearchMode::enumerate_extremal, threads));
    const SearchResult b = turan_exact(config(8, {prism(1)}, SearchMode::enumerate_extremal, 1));
    CHECK(a.max_edges == 19);
    CHECK(a.extremal == b.extremal);
    const SearchResult c = turan_exact(config(7, {path(4)}, SearchMode::enumerate_extremal, threads));
    CHECK(c.max_edges == 6);
    CHECK(c.extremal.size() == 3);
    CHECK(turan_exact(config(8, {path_power(6, 2)}, SearchMode::max_only, threads)).max_edges == 19);
    std::uint64_t count = enumerate_free_graphs(7, {}, [](const Graph&) {});
    CHECK(count == 1044);
  }
}

TEST_CASE("node budget makes the result non-exhaustive") {
  SearchConfig c = config(8, {prism(1)}, SearchMode::enumerate_extremal);
  c.node_budget = 50;
  const SearchResult r = turan_exact(c);
  CHECK_FALSE(r.exhaustive);
  CHECK_THROWS_AS(enumerate_free_graphs(8, {}, [](const Graph&) {}, 100), CapacityError);
}

TEST_CASE("search input validation") {
  CHECK_THROWS_AS(turan_exact(config(11, {prism(1)}, SearchMode::max_only)), CapacityError);
  CHECK_THROWS_AS(turan_exact(config(-1, {prism(1)}, SearchMode::max_only)), GraphError);
  SearchConfig wrong = config(6, {prism(1)}, SearchMode::max_only);
  wrong.seed_witness = complete_graph(5);
  CHECK_THROWS_AS(turan_exact(wrong), GraphError);
  SearchConfig dirty = config(6, {prism(1)}, SearchMode::max_only);
  dirty.seed_witness = complete_graph(6);
  CHECK_THROWS_AS(turan_exact(dirty), GraphError);
}

TEST_CASE("impossible and trivial instances") {
  const SearchResult none = turan_exact(config(3, {Graph(1)}, SearchMode::enumerate_extremal));
  CHECK(none.max_edges == -1);
  CHECK(none.extremal.empty());
  const SearchResult zero = turan_exact(config(0, {path(2)}, SearchMode::enumerate_extremal));
  CHECK(zero.max_edges == 0);
  const SearchResult edgeless = turan_exact(config(5, {path(2)}, SearchMode::enumerate_extremal));
  CHECK(edgeless.max_edges == 0);
  CHECK(edgeless.extremal == std::vector<std::string>{to_graph6(empty_graph(5))});
}

TEST_CASE("construction seeds are free and as large as any pool member") {
  for (int n = 1; n <= 12; ++n) {
    const std::vector<Pattern> forbidden{Pattern(prism(1))};
    const auto seed = construction_seed(n, forbidden);
    REQUIRE(seed.has_value());
    CHECK(prism_free(seed->graph, 1));
    CHECK(static_cast<std::int64_t>(seed->graph.edge_count()) == seed->edges);
    for (const ConstructionSpec& s : seed_pool(n)) {
      const Graph g = build(s);
      if (g.order() == n && prism_free(g, 1)) CHECK(static_cast<std::int64_t>(g.edge_count()) <= seed->edges);
    }
  }
}

TEST_CASE("fixed-body search") {
  const Graph body = empty_graph(3);
  const std::vector<Edge> optional{{0, 1}, {0, 2}, {1, 2}};
  const FixedBodyResult r = max_supergraph_over_fixed_body(body, optional, Pattern(cycle(3)));
  CHECK(r.max_edges == 2);
  CHECK(r.max_added == 2);
  CHECK(r.maximizing_subsets.size() == 3);
  CHECK(r.extremal == std::vector<std::string>{canonical_bytes(path(3))});

  std::vector<Edge> missing;
  const Graph p6 = path_power(6, 2);
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (!p6.has_edge(u, v)) missing.push_back({u, v});
    }
  }
  const FixedBodyResult g = max_supergraph_over_fixed_body(p6, missing, Pattern(prism(1)));
  CHECK(g.max_edges == 12);
  CHECK(g.extremal == std::vector<std::string>{canonical_bytes(fixture::g1())});

  CHECK_THROWS_AS(max_supergraph_over_fixed_body(p6, std::vector<Edge>{{0, 1}}, Pattern(prism(1))), GraphError);
}
