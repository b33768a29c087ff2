#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddprism/constructions.hpp"

namespace oddprism {

/// A closed-form Turán value together with the constructions predicted to
/// attain it.
struct FormulaValue {
  std::int64_t value = 0;
  std::vector<ConstructionSpec> family;
  /// Set when the value falls outside the general pattern (n = 5 for the
  /// triangular prism).
  std::optional<std::string> exception_note;
  /// main_theorem_value only: every maximizing size of the P4-free side.
  std::vector<int> maximizers;
};

std::int64_t binomial2(std::int64_t n);

/// ex(n, P_k) for k >= 2.
FormulaValue path_turan(int n, int k);
/// ex(n, P_4) = n + (j^2 - 3j)/2 with j = n mod 3.
FormulaValue p4_turan(int n);
/// Values alone, without building the family; cheap enough for long sweeps.
std::int64_t p4_value(int n);
std::int64_t c3prism_value(int n);
/// Also collects the maximizing part sizes when `maximizers` is given.
std::int64_t main_theorem_best(int n, std::vector<int>* maximizers = nullptr);

/// ex(n, C_3 □ P_2).
FormulaValue c3prism_turan(int n);
/// max over n_a + n_b = n of n_a * n_b + ex(n_a, P_4).
FormulaValue main_theorem_value(int n);
/// ex(n, P_6^2); the value matches c3prism_turan from n = 6 on.
FormulaValue p6square_turan(int n);
std::int64_t mantel(int n);

/// F_n^{i,j} for every admissible j (1 <= j <= i, 3 | i - j).
std::vector<ConstructionSpec> f_family(int n, int i);

}  // namespace oddprism
