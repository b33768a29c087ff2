#include "oddprism/formulas.hpp"

namespace oddprism {

namespace {

void require_order(int n) {
  if (n < 0) throw GraphError("formula: order must be non-negative");
}

FormulaValue complete_regime(int n) {
  FormulaValue f;
  f.value = binomial2(n);
  f.family.push_back({"complete", {n}});
  return f;
}

std::int64_t piecewise(int n) {
  const std::int64_t nn = n;
  const int r = n % 6;
  if (r == 1 || r == 2 || r == 3) return nn * nn / 4 + (nn - 1) / 2;
  return nn * nn / 4 + (nn + 1) / 2;
}

ConstructionSpec h_spec(int n, int i) { return {"H", {n, i}}; }

void append(std::vector<ConstructionSpec>& out, const std::vector<ConstructionSpec>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// Extremal graphs for P_6^2 when n >= 6, listed by residue of n mod 6.
std::vector<ConstructionSpec> p6square_family(int n) {
  const int half_down = n / 2;
  const int half_up = (n + 1) / 2;
  std::vector<ConstructionSpec> out;
  switch (n % 6) {
    case 0: out.push_back(h_spec(n, half_down)); break;
    case 1:
      append(out, f_family(n, half_up));
      out.push_back(h_spec(n, half_down));
      break;
    case 2:
      append(out, f_family(n, half_down));
      append(out, f_family(n, half_down + 1));
      break;
    case 3:
      append(out, f_family(n, half_up));
      out.push_back(h_spec(n, half_up + 1));
      break;
    case 4: out.push_back(h_spec(n, half_down + 1)); break;
    default: out.push_back(h_spec(n, half_up)); break;
  }
  return out;
}

}  // namespace

std::int64_t binomial2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::vector<ConstructionSpec> f_family(int n, int i) {
  std::vector<ConstructionSpec> out;
  for (int j = (i - 1) % 3 + 1; j <= i; j += 3) out.push_back({"F", {n, i, j}});
  return out;
}

FormulaValue path_turan(int n, int k) {
  require_order(n);
  if (k < 2) throw GraphError("path_turan: k must be at least 2");
  if (n < k - 1) return complete_regime(n);
  FormulaValue f;
  const int t = n / (k - 1);
  const int r = n % (k - 1);
  f.value = t * binomial2(k - 1) + binomial2(r);
  for (int v = 0; v < path_extremal_count(n, k); ++v) f.family.push_back({"path_extremal", {n, k, v}});
  return f;
}

std::int64_t p4_value(int n) {
  require_order(n);
  const int j = n % 3;
  return n + (j * j - 3 * j) / 2;
}

std::int64_t c3prism_value(int n) {
  require_order(n);
  return n <= 5 ? binomial2(n) : piecewise(n);
}

std::int64_t main_theorem_best(int n, std::vector<int>* maximizers) {
  require_order(n);
  std::int64_t best = -1;
  for (int na = 0; na <= n; ++na) {
    const std::int64_t v = static_cast<std::int64_t>(na) * (n - na) + p4_value(na);
    if (v > best) {
      best = v;
      if (maximizers) maximizers->clear();
    }
    if (v == best && maximizers) maximizers->push_back(na);
  }
  return best;
}

FormulaValue p4_turan(int n) {
  FormulaValue f;
  f.value = p4_value(n);
  for (int v = 0; v < p4_extremal_count(n); ++v) f.family.push_back({"p4_extremal", {n, v}});
  return f;
}

FormulaValue c3prism_turan(int n) {
  require_order(n);
  if (n <= 4) return complete_regime(n);
  if (n == 5) {
    FormulaValue f = complete_regime(5);
    f.exception_note = "n = 5: K_5 is prism-free, so the value is C(5,2) = 10 rather than the general formula";
    return f;
  }
  FormulaValue f;
  f.value = c3prism_value(n);
  switch (n) {
    case 6: f.family = {{"G1", {}}, h_spec(6, 3)}; break;
    case 7:
      f.family = {{"G2", {}}};
      append(f.family, f_family(7, 4));
      f.family.push_back(h_spec(7, 3));
      break;
    case 8:
      f.family = {{"G3", {}}};
      append(f.family, f_family(8, 4));
      append(f.family, f_family(8, 5));
      break;
    default: f.family = p6square_family(n); break;
  }
  return f;
}

FormulaValue main_theorem_value(int n) {
  FormulaValue f;
  f.value = main_theorem_best(n, &f.maximizers);
  for (int na : f.maximizers) {
    const int members = p4_extremal_count(na);
    for (int v = 0; v < members; ++v) f.family.push_back({"main_extremal", {n, na, v}});
  }
  return f;
}

FormulaValue p6square_turan(int n) {
  require_order(n);
  if (n < 6) return complete_regime(n);
  FormulaValue f;
  f.value = piecewise(n);
  f.family = p6square_family(n);
  return f;
}

std::int64_t mantel(int n) {
  require_order(n);
  return static_cast<std::int64_t>(n) * n / 4;
}

}  // namespace oddprism
