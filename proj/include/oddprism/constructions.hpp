#pragma once

#include <string>
#include <vector>

#include "oddprism/graph.hpp"

namespace oddprism {

// Labelling conventions
//
//  * path(k), cycle(k), path_power(k, p): vertices 0..k-1 along the path, so
//    v_i of the usual 1-based notation is vertex i-1.
//  * prism(k) = cycle(2k+1) □ path(2): vertex (a, b) is 2a + b; the two odd
//    cycles are the even and the odd labels.
//  * H / F constructions: the class X holding the embedded graph is
//    0..i-1, the independent class Y is i..n-1. In F the star centre is 0
//    with leaves 1..j-1, and triangles occupy consecutive triples after it.
//  * Fixtures built on P_6^2 keep v_1..v_6 as 0..5; extra vertices x, y
//    are 6 and 7, and further attached vertices follow in order.

Graph path(int k);
Graph cycle(int k);
Graph star(int leaves);
Graph complete_bipartite(int s, int t);

Graph turan_graph(int n, int r);
Graph path_power(int k, int p);
Graph prism(int k);

Graph h_construction(int n, int i);
Graph f_construction(int n, int i, int j);

/// t vertex-disjoint triangles on 0..3t-1.
Graph triangles(int t);

namespace fixture {

inline constexpr int v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4, v6 = 5;
inline constexpr int x = 6, y = 7;

Graph g1();
Graph g2();
Graph g3();
Graph h1();
Graph h2();
/// P_6^2 + v3v6 + x of type 1 + y on {v1,v3,v5,v6} + (n-8) vertices on {v3,v5,v6}.
Graph h3(int n);
/// G_1 + (n-6) independent vertices each joined to {v1,v2,v3}.
Graph h4(int n);

/// Neighbourhoods of the four attachment types of a degree-4 vertex on P_6^2.
std::vector<std::vector<int>> attachment_types();

}  // namespace fixture

Graph named_fixture(const std::string& name);

/// Every extremal graph for P_4 on n vertices, in the order
/// [tC3 ∪ rest, then the star variants for l = 0..t-1].
std::vector<Graph> p4_extremal_family(int n);
/// Size of p4_extremal_family(n) without building it.
int p4_extremal_count(int n);

/// Extremal graphs for P_k on n vertices: variant 0 is tK_{k-1} ∪ K_r
/// (n = (k-1)t + r); for even k and r in {k/2, (k-2)/2}, variant 1 + s is
/// (t-s-1)K_{k-1} ∪ (K_{(k-2)/2} ⊗ complement of K_{k/2 + s(k-1) + r}).
/// For n < k - 1 the only variant is K_n.
int path_extremal_count(int n, int k);
Graph path_extremal(int n, int k, int variant);

/// K_{n_a, n - n_a} with p4_extremal_family(n_a)[variant] placed in the
/// n_a side, i.e. join(family member, empty(n - n_a)).
Graph main_extremal(int n, int n_a, int variant);

/// Symbolic name of a construction with its parameters.
struct ConstructionSpec {
  std::string name;
  std::vector<int> params;

  friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

std::string to_string(const ConstructionSpec& spec);
Graph build(const ConstructionSpec& spec);

}  // namespace oddprism
