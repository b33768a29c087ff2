#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oddprism/canonical.hpp"
#include "oddprism/constructions.hpp"
#include "oddprism/graph6.hpp"
#include "oracles.hpp"

using namespace oddprism;

namespace {

// Order of the group generated by `gens`, by closing under composition.
std::size_t group_order(int n, const std::vector<Permutation>& gens) {
  Permutation id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    const Permutation p = frontier.back();
    frontier.pop_back();
    for (const Permutation& g : gens) {
      Permutation q(n);
      for (int i = 0; i < n; ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) frontier.push_back(q);
    }
  }
  return seen.size();
}

void check_relabeling(const Graph& g) {
  const CanonicalForm cf = canonical_form(g);
  CHECK(to_graph6(g.relabeled(cf.relabeling)) == cf.canonical_bytes);
}

}  // namespace

TEST_CASE("canonical form separates exactly the isomorphism classes, n <= 6") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    std::map<std::string, std::uint64_t> by_ours;
    std::map<std::uint64_t, std::string> by_oracle;
    bool consistent = true;
    oracle::for_each_labelled(n, [&](const Graph& g) {
      const std::string ours = canonical_bytes(g);
      const std::uint64_t theirs = oracle::canonical_code(g);
      auto [a, new_a] = by_ours.emplace(ours, theirs);
      auto [b, new_b] = by_oracle.emplace(theirs, ours);
      if (a->second != theirs || b->second != ours) consistent = false;
    });
    CHECK(consistent);
    CHECK(by_ours.size() == expected[n]);
    CHECK(by_oracle.size() == expected[n]);
  }
}

TEST_CASE("1044 classes on seven vertices") {
  std::set<std::string> classes;
  oracle::for_each_labelled(7, [&](const Graph& g) { classes.insert(canonical_bytes(g)); });
  CHECK(classes.size() == 1044);
}

TEST_CASE("isomorphism decision agrees with brute force on random 7-vertex pairs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const Graph a = oracle::random_graph(7, 0.5, rng);
    // half the pairs are relabelled copies with one edge toggled
    Graph b = a.relabeled(oracle::random_permutation(7, rng));
    if (trial % 2 == 1) {
      const int u = static_cast<int>(rng() % 7);
      const int v = (u + 1 + static_cast<int>(rng() % 6)) % 7;
      if (b.has_edge(u, v)) {
        b.remove_edge(u, v);
      } else {
        b.add_edge(u, v);
      }
    }
    CHECK(isomorphic(a, b) == (oracle::canonical_code(a) == oracle::canonical_code(b)));
  }
}

TEST_CASE("invariance under 100 random permutations") {
  std::mt19937_64 rng(5);
  std::vector<Graph> graphs{cycle(5),         prism(1),         prism(2),        path_power(6, 2),
                            fixture::g1(),    fixture::g2(),    fixture::g3(),   fixture::h1(),
                            fixture::h2(),    h_construction(12, 6), complete_bipartite(3, 4),
                            turan_graph(20, 3), empty_graph(9),  complete_graph(10)};
  for (int i = 0; i < 20; ++i) {
    graphs.push_back(oracle::random_graph(5 + static_cast<int>(rng() % 40), 0.3, rng));
  }
  for (const Graph& g : graphs) {
    const CanonicalForm base = canonical_form(g);
    check_relabeling(g);
    for (int t = 0; t < 100; ++t) {
      const Graph h = g.relabeled(oracle::random_permutation(g.order(), rng));
      const CanonicalForm cf = canonical_form(h);
      CHECK(cf.canonical_bytes == base.canonical_bytes);
      CHECK(to_graph6(h.relabeled(cf.relabeling)) == cf.canonical_bytes);
    }
  }
}

TEST_CASE("canonical examples") {
  CHECK(canonical_form(star(3)) != canonical_form(disjoint_union(complete_graph(3), Graph(1))));
  // the two drawings of the fixture on the P_6^2 labelling and a shuffled one
  const Graph g1 = fixture::g1();
  const std::vector<int> drawing{5, 3, 1, 0, 2, 4};
  CHECK(canonical_form(g1) == canonical_form(g1.relabeled(drawing)));
  CHECK(isomorphic(prism(1), cartesian_product(cycle(3), path(2))));
  CHECK_FALSE(isomorphic(prism(1), complete_bipartite(3, 3)));
  CHECK_FALSE(isomorphic(path(3), path(4)));
  CHECK_THROWS_AS(canonical_form(empty_graph(65)), CapacityError);
}

TEST_CASE("automorphism generators generate the full group") {
  CHECK(group_order(6, automorphism_generators(prism(1))) == 12);
  CHECK(group_order(6, automorphism_generators(path_power(6, 2))) == 2);
  CHECK(group_order(10, automorphism_generators(prism(2))) == 20);
  CHECK(group_order(7, automorphism_generators(empty_graph(7))) == 5040);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, trial % 3 == 0 ? 0.2 : 0.5, rng);
    const auto gens = automorphism_generators(g);
    for (const Permutation& p : gens) CHECK(g.relabeled(p) == g);
    CHECK(group_order(n, gens) == oracle::count_embeddings(g, g));
  }
}
