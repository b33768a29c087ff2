#include "oddprism/constructions.hpp"

#include <sstream>

namespace oddprism {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw GraphError(msg);
}

// K_{i, n-i} on X = 0..i-1, Y = i..n-1.
Graph bipartite_frame(int n, int i) {
  Graph g(n);
  for (int a = 0; a < i; ++a) {
    for (int b = i; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

void add_triangle(Graph& g, int a) {
  g.add_edge(a, a + 1);
  g.add_edge(a, a + 2);
  g.add_edge(a + 1, a + 2);
}

void attach(Graph& g, int v, std::initializer_list<int> nbrs) {
  for (int u : nbrs) g.add_edge(v, u);
}

Graph grown(const Graph& g, int n) {
  Graph out(n);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

}  // namespace

Graph path(int k) {
  require(k >= 0, "path: negative order");
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int k) {
  require(k >= 3, "cycle: order must be at least 3");
  Graph g = path(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph star(int leaves) {
  require(leaves >= 0, "star: negative leaf count");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int s, int t) {
  require(s >= 0 && t >= 0, "complete_bipartite: negative part");
  return bipartite_frame(s + t, s);
}

Graph turan_graph(int n, int r) {
  require(r >= 1, "turan_graph: need at least one part");
  require(n >= 0, "turan_graph: negative order");
  std::vector<int> part(n);
  const int base = n / r;
  const int big = n % r;
  int v = 0;
  for (int p = 0; p < r; ++p) {
    const int size = base + (p < big ? 1 : 0);
    for (int k = 0; k < size; ++k) part[v++] = p;
  }
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (part[a] != part[b]) g.add_edge(a, b);
    }
  }
  return g;
}

Graph path_power(int k, int p) {
  require(k >= 1, "path_power: order must be at least 1");
  require(p >= 1, "path_power: power must be at least 1");
  Graph g(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k && b - a <= p; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph prism(int k) {
  require(k >= 1, "prism: k must be at least 1");
  return cartesian_product(cycle(2 * k + 1), path(2));
}

Graph triangles(int t) {
  require(t >= 0, "triangles: negative count");
  Graph g(3 * t);
  for (int a = 0; a < t; ++a) add_triangle(g, 3 * a);
  return g;
}

Graph h_construction(int n, int i) {
  require(i >= 0 && i <= n, "H: need 0 <= i <= n");
  require(i % 3 == 0, "H: i must be divisible by 3");
  Graph g = bipartite_frame(n, i);
  for (int a = 0; a < i; a += 3) add_triangle(g, a);
  return g;
}

Graph f_construction(int n, int i, int j) {
  require(i >= 1 && i <= n, "F: need 1 <= i <= n");
  require(i % 3 != 0, "F: i must not be divisible by 3");
  require(j >= 1 && j <= i, "F: need 1 <= j <= i");
  require((i - j) % 3 == 0, "F: i - j must be divisible by 3");
  Graph g = bipartite_frame(n, i);
  // A star on one vertex is just its centre.
  for (int leaf = 1; leaf < j; ++leaf) g.add_edge(0, leaf);
  for (int a = j; a < i; a += 3) add_triangle(g, a);
  return g;
}

namespace fixture {

namespace {

Graph p6_squared(int n) { return grown(path_power(6, 2), n); }

}  // namespace

Graph g1() {
  Graph g = path_power(6, 2);
  g.add_edge(v2, v5);
  g.add_edge(v2, v6);
  g.add_edge(v3, v6);
  return g;
}

Graph g2() {
  Graph g = p6_squared(7);
  attach(g, 6, {v1, v2, v3, v4});
  g.add_edge(v1, v4);
  g.add_edge(v3, v6);
  return g;
}

Graph h1() {
  Graph g = p6_squared(8);
  attach(g, x, {v1, v2, v3, v4});
  attach(g, y, {v1, v3, v5, v6});
  return g;
}

Graph h2() {
  Graph g = p6_squared(8);
  attach(g, x, {v1, v2, v3, v4});
  attach(g, y, {v3, v4, v5, v6});
  return g;
}

Graph g3() {
  Graph g = h2();
  g.add_edge(v1, v4);
  g.add_edge(v3, v6);
  return g;
}

Graph h3(int n) {
  require(n >= 8, "H3: need n >= 8");
  Graph g = p6_squared(n);
  g.add_edge(v3, v6);
  attach(g, x, {v1, v2, v3, v4});
  attach(g, y, {v1, v3, v5, v6});
  for (int z = 8; z < n; ++z) attach(g, z, {v3, v5, v6});
  return g;
}

Graph h4(int n) {
  require(n >= 6, "H4: need n >= 6");
  Graph g = grown(g1(), n);
  for (int z = 6; z < n; ++z) attach(g, z, {v1, v2, v3});
  return g;
}

std::vector<std::vector<int>> attachment_types() {
  return {{v1, v2, v3, v4}, {v2, v3, v4, v5}, {v1, v3, v4, v6}, {v1, v3, v5, v6}};
}

}  // namespace fixture

Graph named_fixture(const std::string& name) {
  if (name == "G1") return fixture::g1();
  if (name == "G2") return fixture::g2();
  if (name == "G3") return fixture::g3();
  if (name == "H1") return fixture::h1();
  if (name == "H2") return fixture::h2();
  throw GraphError("unknown fixture '" + name + "'");
}

std::vector<Graph> p4_extremal_family(int n) {
  require(n >= 0, "p4_extremal_family: negative order");
  const int t = n / 3;
  const int r = n % 3;
  std::vector<Graph> out;
  if (r == 0) {
    out.push_back(triangles(t));
    return out;
  }
  // rest ∪ tC3, then K_{1, 3l+2+r} ∪ (t-l-1)C3.
  out.push_back(disjoint_union(complete_graph(r), triangles(t)));
  for (int l = 0; l < t; ++l) {
    out.push_back(disjoint_union(star(3 * l + 2 + r), triangles(t - l - 1)));
  }
  return out;
}

int p4_extremal_count(int n) {
  require(n >= 0, "p4_extremal_family: negative order");
  return n % 3 == 0 ? 1 : 1 + n / 3;
}

int path_extremal_count(int n, int k) {
  require(n >= 0, "path_extremal: negative order");
  require(k >= 2, "path_extremal: k must be at least 2");
  if (n < k - 1) return 1;
  const int t = n / (k - 1);
  const int r = n % (k - 1);
  if (k % 2 == 0 && (r == k / 2 || r == (k - 2) / 2)) return 1 + t;
  return 1;
}

Graph path_extremal(int n, int k, int variant) {
  const int count = path_extremal_count(n, k);
  require(variant >= 0 && variant < count, "path_extremal: variant out of range");
  if (n < k - 1) return complete_graph(n);
  const int t = n / (k - 1);
  const int r = n % (k - 1);
  auto cliques = [&](int c) {
    Graph g;
    for (int a = 0; a < c; ++a) g = disjoint_union(g, complete_graph(k - 1));
    return g;
  };
  if (variant == 0) return disjoint_union(cliques(t), complete_graph(r));
  const int s = variant - 1;
  const Graph core = join(complete_graph((k - 2) / 2), empty_graph(k / 2 + s * (k - 1) + r));
  return disjoint_union(core, cliques(t - s - 1));
}

Graph main_extremal(int n, int n_a, int variant) {
  require(n_a >= 0 && n_a <= n, "main_extremal: need 0 <= n_a <= n");
  const auto family = p4_extremal_family(n_a);
  require(variant >= 0 && variant < static_cast<int>(family.size()),
          "main_extremal: variant " + std::to_string(variant) + " out of range (family has " +
              std::to_string(family.size()) + " members)");
  return join(family[variant], empty_graph(n - n_a));
}

std::string to_string(const ConstructionSpec& spec) {
  static const std::vector<std::pair<std::string, std::string>> symbols = {
      {"complete", "K"},   {"complete_bipartite", "K"}, {"path", "P"},
      {"cycle", "C"},      {"empty", "E"},              {"turan", "T"},
      {"prism", "prism"},  {"H", "H"},                  {"F", "F"},
      {"H3", "H3"},        {"H4", "H4"},                {"p4_extremal", "p4ext"},
      {"main_extremal", "main"},     {"path_extremal", "pathext"}, {"star", "S"}};
  std::ostringstream os;
  if (spec.name == "path_power") {
    os << "P^" << (spec.params.size() > 1 ? spec.params[1] : 0) << ':'
       << (spec.params.empty() ? 0 : spec.params[0]);
    return os.str();
  }
  std::string sym = spec.name;
  for (const auto& [name, s] : symbols) {
    if (name == spec.name) sym = s;
  }
  os << sym;
  for (int p : spec.params) os << ':' << p;
  return os.str();
}

Graph build(const ConstructionSpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t k) {
    require(p.size() == k, spec.name + ": expected " + std::to_string(k) + " parameter(s), got " +
                               std::to_string(p.size()));
  };
  const std::string& name = spec.name;
  if (name == "complete") { need(1); return complete_graph(p[0]); }
  if (name == "complete_bipartite") { need(2); return complete_bipartite(p[0], p[1]); }
  if (name == "path") { need(1); return path(p[0]); }
  if (name == "cycle") { need(1); return cycle(p[0]); }
  if (name == "empty") { need(1); return empty_graph(p[0]); }
  if (name == "star") { need(1); return star(p[0]); }
  if (name == "turan") { need(2); return turan_graph(p[0], p[1]); }
  if (name == "path_power") { need(2); return path_power(p[0], p[1]); }
  if (name == "prism") { need(1); return prism(p[0]); }
  if (name == "H") { need(2); return h_construction(p[0], p[1]); }
  if (name == "F") { need(3); return f_construction(p[0], p[1], p[2]); }
  if (name == "H3") { need(1); return fixture::h3(p[0]); }
  if (name == "H4") { need(1); return fixture::h4(p[0]); }
  if (name == "p4_extremal") {
    need(2);
    const auto fam = p4_extremal_family(p[0]);
    require(p[1] >= 0 && p[1] < static_cast<int>(fam.size()), "p4_extremal: variant out of range");
    return fam[p[1]];
  }
  if (name == "path_extremal") { need(3); return path_extremal(p[0], p[1], p[2]); }
  if (name == "main_extremal") { need(3); return main_extremal(p[0], p[1], p[2]); }
  if (name == "G1" || name == "G2" || name == "G3" || name == "H1" || name == "H2") {
    need(0);
    return named_fixture(name);
  }
  throw GraphError("unknown construction '" + name + "'");
}

}  // namespace oddprism
