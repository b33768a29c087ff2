#include "oddprism/canonical.hpp"

#include <algorithm>
#include <bit>

#include "oddprism/graph6.hpp"

namespace oddprism {
namespace canon {

namespace {

constexpr int kContinue = 1 << 20;

struct Partition {
  int count = 0;
  std::array<std::uint64_t, 64> cells{};
};

// Split cells by neighbour counts into other cells until the partition is
// equitable. Fragments are ordered by ascending count, so the result is
// determined by the input cell order and the graph alone.
void refine(const std::uint64_t* rows, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count; ++s) {
      const std::uint64_t splitter = p.cells[s];
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t cell = p.cells[c];
        if (std::has_single_bit(cell)) continue;
        int counts[64];
        int lo = 64;
        int hi = -1;
        for (std::uint64_t m = cell; m != 0; m &= m - 1) {
          const int v = std::countr_zero(m);
          const int k = std::popcount(rows[v] & splitter);
          counts[v] = k;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        std::uint64_t frags[65];
        int nfrag = 0;
        for (int k = lo; k <= hi; ++k) {
          std::uint64_t f = 0;
          for (std::uint64_t m = cell; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (counts[v] == k) f |= std::uint64_t{1} << v;
          }
          if (f != 0) frags[nfrag++] = f;
        }
        for (int i = p.count - 1; i > c; --i) p.cells[i + nfrag - 1] = p.cells[i];
        for (int i = 0; i < nfrag; ++i) p.cells[c + i] = frags[i];
        p.count += nfrag - 1;
        c += nfrag - 1;
        changed = true;
      }
    }
  }
}

struct Find {
  std::array<std::int8_t, 64> parent{};
  explicit Find(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::int8_t>(i);
  }
  int root(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = static_cast<std::int8_t>(b);
  }
};

class Searcher {
 public:
  Searcher(const std::uint64_t* rows, int n, Labeling& out) : rows_(rows), n_(n), out_(out) {}

  void run() {
    Partition root;
    root.count = 1;
    root.cells[0] = n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    descend(root, 0);
    out_.lab = best_lab_;
  }

 private:
  int descend(Partition& p, int depth) {
    refine(rows_, p);
    if (p.count == n_) return leaf(p, depth);

    int target = -1;
    int target_size = 65;
    for (int c = 0; c < p.count; ++c) {
      const int sz = std::popcount(p.cells[c]);
      if (sz > 1 && sz < target_size) {
        target = c;
        target_size = sz;
      }
    }

    const std::uint64_t cell = p.cells[target];
    std::uint64_t tried = 0;
    for (std::uint64_t m = cell; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (tried != 0 && equivalent_to_tried(v, tried, depth)) continue;
      tried |= std::uint64_t{1} << v;

      Partition child;
      child.count = p.count + 1;
      for (int i = 0; i < target; ++i) child.cells[i] = p.cells[i];
      child.cells[target] = std::uint64_t{1} << v;
      child.cells[target + 1] = cell & ~(std::uint64_t{1} << v);
      for (int i = target + 1; i < p.count; ++i) child.cells[i + 1] = p.cells[i];
      path_[depth] = static_cast<std::int8_t>(v);

      const int r = descend(child, depth + 1);
      if (r < depth) return r;
    }
    return kContinue;
  }

  // Orbits of the automorphisms found so far that fix the current path.
  bool equivalent_to_tried(int v, std::uint64_t tried, int depth) {
    Find f(n_);
    bool any = false;
    for (const auto& g : out_.automorphisms) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = g[path_[i]] == path_[i];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) f.unite(x, g[x]);
    }
    if (!any) return false;
    const int rv = f.root(v);
    for (std::uint64_t m = tried; m != 0; m &= m - 1) {
      if (f.root(std::countr_zero(m)) == rv) return true;
    }
    return false;
  }

  int leaf(const Partition& p, int depth) {
    std::array<std::int8_t, 64> lab{};
    for (int i = 0; i < n_; ++i) lab[i] = static_cast<std::int8_t>(std::countr_zero(p.cells[i]));
    std::array<std::uint64_t, 64> code{};
    permuted_rows(rows_, n_, lab.data(), code.data());

    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = path_;
      return kContinue;
    }
    if (same(code, first_code_)) return record(lab, first_lab_, first_path_, depth);
    if (same(code, best_code_)) return record(lab, best_lab_, best_path_, depth);
    if (less(code, best_code_)) {
      best_code_ = code;
      best_lab_ = lab;
      best_path_ = path_;
    }
    return kContinue;
  }

  // Equal codes give an automorphism; the current subtree then mirrors an
  // already explored one, so jump back to where the two paths split.
  int record(const std::array<std::int8_t, 64>& lab, const std::array<std::int8_t, 64>& other,
             const std::array<std::int8_t, 64>& other_path, int depth) {
    std::array<std::int8_t, 64> g{};
    for (int i = 0; i < n_; ++i) g[lab[i]] = other[i];
    out_.automorphisms.push_back(g);
    int d = 0;
    while (d < depth && path_[d] == other_path[d]) ++d;
    return d;
  }

  bool same(const std::array<std::uint64_t, 64>& a, const std::array<std::uint64_t, 64>& b) const {
    return std::equal(a.begin(), a.begin() + n_, b.begin());
  }
  bool less(const std::array<std::uint64_t, 64>& a, const std::array<std::uint64_t, 64>& b) const {
    return std::lexicographical_compare(a.begin(), a.begin() + n_, b.begin(), b.begin() + n_);
  }

  const std::uint64_t* rows_;
  int n_;
  Labeling& out_;
  bool have_first_ = false;
  std::array<std::uint64_t, 64> first_code_{};
  std::array<std::uint64_t, 64> best_code_{};
  std::array<std::int8_t, 64> first_lab_{};
  std::array<std::int8_t, 64> best_lab_{};
  std::array<std::int8_t, 64> path_{};
  std::array<std::int8_t, 64> first_path_{};
  std::array<std::int8_t, 64> best_path_{};
};

}  // namespace

void permuted_rows(const std::uint64_t* rows, int n, const std::int8_t* lab, std::uint64_t* out) {
  std::int8_t inv[64];
  for (int i = 0; i < n; ++i) inv[lab[i]] = static_cast<std::int8_t>(i);
  for (int i = 0; i < n; ++i) {
    std::uint64_t r = 0;
    for (std::uint64_t m = rows[lab[i]]; m != 0; m &= m - 1) {
      r |= std::uint64_t{1} << inv[std::countr_zero(m)];
    }
    out[i] = r;
  }
}

void canonical_labeling(const std::uint64_t* rows, int n, Labeling& out) {
  out.automorphisms.clear();
  if (n <= 1) {
    out.lab[0] = 0;
    return;
  }
  Searcher(rows, n, out).run();
}

std::array<std::int8_t, 64> orbits(int n, std::span<const std::array<std::int8_t, 64>> gens) {
  Find f(n);
  for (const auto& g : gens) {
    for (int x = 0; x < n; ++x) f.unite(x, g[x]);
  }
  std::array<std::int8_t, 64> rep{};
  for (int x = 0; x < n; ++x) rep[x] = static_cast<std::int8_t>(f.root(x));
  return rep;
}

}  // namespace canon

namespace {

void require_word(const Graph& g, const char* what) {
  if (g.order() > Graph::kWordOrder) {
    throw CapacityError(std::string(what) + " requires order <= 64");
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  require_word(g, "canonical_form");
  const int n = g.order();
  CanonicalForm cf;
  if (n == 0) {
    cf.canonical_bytes = to_graph6(g);
    return cf;
  }
  const auto rows = g.rows64();
  canon::Labeling lab;
  canon::canonical_labeling(rows.data(), n, lab);
  std::vector<std::uint64_t> crow(n);
  canon::permuted_rows(rows.data(), n, lab.lab.data(), crow.data());
  cf.canonical_bytes = to_graph6(Graph::from_rows64(n, crow));
  cf.relabeling.assign(n, 0);
  for (int i = 0; i < n; ++i) cf.relabeling[lab.lab[i]] = i;
  return cf;
}

std::string canonical_bytes(const Graph& g) { return canonical_form(g).canonical_bytes; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_bytes(a) == canonical_bytes(b);
}

std::vector<Permutation> automorphism_generators(const Graph& g) {
  require_word(g, "automorphism_generators");
  std::vector<Permutation> out;
  if (g.order() <= 1) return out;
  const auto rows = g.rows64();
  canon::Labeling lab;
  canon::canonical_labeling(rows.data(), g.order(), lab);
  for (const auto& a : lab.automorphisms) out.emplace_back(a.begin(), a.begin() + g.order());
  return out;
}

}  // namespace oddprism
