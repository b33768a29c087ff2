#include <doctest.h>

#include <bit>
#include <random>

#include "oddprism/constructions.hpp"
#include "oddprism/graph.hpp"
#include "oracles.hpp"

using namespace oddprism;

namespace {

bool colourable(const Graph& g, int c) {
  const int n = g.order();
  std::vector<int> colour(n, 0);
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) proper = proper && colour[e.u] != colour[e.v];
    if (proper) return true;
    int i = 0;
    while (i < n && ++colour[i] == c) colour[i++] = 0;
    if (i == n) return false;
  }
}

int brute_chromatic(const Graph& g) {
  if (g.order() == 0) return 0;
  int c = 1;
  while (!colourable(g, c)) ++c;
  return c;
}

}  // namespace

TEST_CASE("from_edges builds the listed edges") {
  const Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.edge_count() == 3);
  CHECK(c3.has_edge(2, 0));
  CHECK(c3.has_edge(0, 2));
  CHECK(Graph(4).edge_count() == 0);

  std::vector<Edge> all;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) all.push_back({u, v});
  }
  const Graph k6 = Graph::from_edges(6, all);
  CHECK(k6.edge_count() == 15);
  CHECK(k6 == complete_graph(6));
}

TEST_CASE("duplicate edges collapse") {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
}

TEST_CASE("malformed input raises GraphError") {
  CHECK_THROWS_AS(Graph(-1), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), GraphError);
  Graph g(4);
  CHECK_THROWS_AS(g.add_edge(2, 2), GraphError);
  CHECK_THROWS_AS(g.degree(4), GraphError);
  const std::vector<int> bad_perm{0, 0, 1, 2};
  CHECK_THROWS_AS(g.relabeled(bad_perm), GraphError);
}

TEST_CASE("capacity limits raise CapacityError") {
  CHECK_THROWS_AS(Graph(Graph::kMaxOrder + 1), CapacityError);
  CHECK_THROWS_AS(complete_graph(65).row64(0), CapacityError);
  CHECK_THROWS_AS(chromatic_number(empty_graph(kExactStatsCap + 1)), CapacityError);
}

TEST_CASE("rows beyond one word behave like small ones") {
  Graph g(200);
  g.add_edge(3, 150);
  g.add_edge(199, 0);
  CHECK(g.has_edge(150, 3));
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_count() == 2);
  g.remove_edge(3, 150);
  CHECK_FALSE(g.has_edge(3, 150));
  CHECK(complement(complement(g)) == g);
  CHECK(complement(g).edge_count() == 200 * 199 / 2 - 1);
}

TEST_CASE("join and union examples") {
  const Graph k23 = join(empty_graph(2), empty_graph(3));
  CHECK(k23.edge_count() == 6);
  CHECK(k23 == complete_bipartite(2, 3));
  for (int k = 2; k <= 4; ++k) {
    CHECK(join(complete_graph(1), cycle(2 * k)).edge_count() == static_cast<std::size_t>(4 * k));
  }
  const Graph star3 = star(3);
  CHECK(join(star3, empty_graph(5)).edge_count() == 23);
  CHECK(join(star3, empty_graph(5)).order() == 9);

  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(two_triangles.order() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK(two_triangles == triangles(2));
  const Graph g = fixture::g1();
  CHECK(disjoint_union(g, empty_graph(0)) == g);
}

TEST_CASE("cartesian product examples") {
  CHECK(cartesian_product(cycle(3), path(2)).edge_count() == 9);
  CHECK(cartesian_product(cycle(5), path(2)).edge_count() == 15);
  const Graph sq = cartesian_product(path(2), path(2));
  CHECK(sq.order() == 4);
  CHECK(sq.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(sq.degree(v) == 2);
}

TEST_CASE("complement examples") {
  CHECK(complement(complete_graph(6)) == empty_graph(6));
  CHECK(complement(complement(fixture::g1())) == fixture::g1());
  const Graph c5c = complement(cycle(5));
  // 0-2-4-1-3-0 is the complement cycle
  const std::vector<int> perm{0, 2, 4, 1, 3};
  const Graph back = cycle(5).relabeled(perm);
  CHECK(back == c5c);
}

TEST_CASE("exact statistics") {
  for (int k = 1; k <= 3; ++k) CHECK(chromatic_number(cycle(2 * k + 1)) == 3);
  CHECK(chromatic_number(prism(1)) == 3);
  CHECK(chromatic_number(prism(2)) == 3);
  const BasicStats s = basic_stats(complete_bipartite(3, 4));
  CHECK(s.independence_number == 4);
  CHECK(s.min_degree == 3);
  CHECK(s.chromatic_number == 2);
  CHECK(independence_number(empty_graph(5)) == 5);
  CHECK(chromatic_number(complete_graph(7)) == 7);
  CHECK(chromatic_number(empty_graph(3)) == 1);
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(is_bipartite(cycle(6)));
  CHECK_FALSE(is_bipartite(cycle(7)));
}

TEST_CASE("chromatic and independence numbers agree with brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    int alpha = 0;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) {
          if ((s >> u & 1U) && (s >> v & 1U) && g.has_edge(u, v)) ok = false;
        }
      }
      if (ok) alpha = std::max(alpha, std::popcount(s));
    }
    CHECK(independence_number(g) == alpha);

    CHECK(chromatic_number(g) == brute_chromatic(g));
  }
}

TEST_CASE("adjacency invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 40);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    std::size_t degree_sum = 0;
    for (int u = 0; u < n; ++u) {
      CHECK_FALSE(g.has_edge(u, u));
      degree_sum += static_cast<std::size_t>(g.degree(u));
      for (int v = 0; v < n; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
    CHECK(degree_sum % 2 == 0);
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(complement(complement(g)) == g);
    CHECK(Graph::from_edges(n, g.edges()) == g);
    if (n <= 64) CHECK(Graph::from_rows64(n, g.rows64()) == g);
  }
}

TEST_CASE("operation edge-count identities over 1000 random pairs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n1 = 1 + static_cast<int>(rng() % 8);
    const int n2 = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n1, 0.5, rng);
    const Graph h = oracle::random_graph(n2, 0.5, rng);
    const std::size_t eg = g.edge_count();
    const std::size_t eh = h.edge_count();
    const Graph prod = cartesian_product(g, h);
    CHECK(prod.order() == n1 * n2);
    CHECK(prod.edge_count() == static_cast<std::size_t>(n1) * eh + static_cast<std::size_t>(n2) * eg);
    const Graph j = join(g, h);
    CHECK(j.order() == n1 + n2);
    CHECK(j.edge_count() == eg + eh + static_cast<std::size_t>(n1 * n2));
    const Graph u = disjoint_union(g, h);
    CHECK(u.edge_count() == eg + eh);
    CHECK(complement(g).edge_count() + eg == static_cast<std::size_t>(n1 * (n1 - 1) / 2));
  }
}

TEST_CASE("induced and without_vertex") {
  const Graph p = path(5);
  const Graph q = p.without_vertex(2);
  CHECK(q.order() == 4);
  CHECK(q.edge_count() == 2);
  const std::vector<Vertex> keep{0, 1, 2};
  CHECK(p.induced(keep) == path(3));
}
