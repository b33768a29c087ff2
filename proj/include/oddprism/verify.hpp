#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddprism/certificate.hpp"
#include "oddprism/search.hpp"

namespace oddprism {

struct VerifyOptions {
  int threads = 1;
  /// Adds wall-clock runtimes to provenance. Off by default so that
  /// certificates are byte-identical across runs and thread counts.
  bool timing = false;
  std::optional<std::uint64_t> node_budget;
};

/// Exact prism-free Turán number against the closed form, n_min..n_max.
std::vector<Certificate> verify_prism_values(int n_max, const VerifyOptions& opts = {}, int n_min = 1);
/// Extremal sets against the tables, n_min..n_max (n >= 6).
std::vector<Certificate> verify_prism_extremal_sets(int n_max, const VerifyOptions& opts = {}, int n_min = 6);
/// Prism-extremal graphs are P_6^2-extremal; below n = 9 the certificate is
/// marked unverified-regime but still records what the oracle sees.
Certificate verify_p6square_agreement(int n, const VerifyOptions& opts = {});
/// Decomposition family {P4} for prism(1..k_max) and P_6^2.
std::vector<Certificate> verify_decomposition_families(int k_max, const VerifyOptions& opts = {});
/// Both joined-side configurations at minimum size contain prism(k).
std::vector<Certificate> verify_joined_side_witnesses(int k_max, const VerifyOptions& opts = {});
/// Fixed-body and attachment checks around P_6^2.
std::vector<Certificate> verify_p6square_attachments(const VerifyOptions& opts = {});
/// Formula identities, the n = 5 exception, lower-bound witnesses and the
/// path/P4 oracle comparisons up to oracle_n_max.
std::vector<Certificate> verify_formulas(int oracle_n_max, const VerifyOptions& opts = {});
/// k = 1 agreement, prism-freeness of every main_extremal construction for
/// k in {1, 2}, and the k >= 2 exact value (unverified regime).
std::vector<Certificate> verify_large_prism_substitute(const VerifyOptions& opts = {});

enum class Profile { quick, full };

struct Report {
  std::vector<Certificate> certificates;
  /// Claims deliberately left unchecked, with the reason.
  nlohmann::json not_attempted = nlohmann::json::array();
};

/// Largest order the full profile searches exhaustively; 9..14 covers every
/// residue class mod 6 of the n >= 9 table.
inline constexpr int kFullProfileOrder = 14;

/// quick: every claim with n <= 8 plus formula invariants. full: the
/// prism-free value, extremal set and P_6^2 comparison up to
/// kFullProfileOrder, and the path oracles up to n = 9.
Report run_all(Profile profile, const VerifyOptions& opts = {});

/// Claim groups accepted by run_claim ("all" included).
std::vector<std::string> claim_names();
/// Runs one claim group. `n` restricts thm1.2 / thm1.3 / thm5.1 to one
/// order; `n_max` overrides the profile's upper end.
Report run_claim(const std::string& name, Profile profile, const VerifyOptions& opts,
                 std::optional<int> n = std::nullopt, std::optional<int> n_max = std::nullopt);

// Building blocks, also used directly by tests.
namespace attachments {

/// The six pairs of P_6^2 that are not edges, in the order
/// v1v4, v1v5, v1v6, v2v5, v2v6, v3v6.
std::vector<Edge> missing_pairs();
/// Every automorphism of P_6^2, computed by exhaustive matching.
std::vector<std::vector<int>> p6square_automorphisms();

struct AttachmentAnalysis {
  std::size_t automorphism_count = 0;
  /// Prism-free 4-subsets of {v1..v6} for a new vertex.
  std::vector<std::vector<int>> prism_free;
  /// Orbits of prism_free under Aut(P_6^2).
  std::vector<std::vector<std::vector<int>>> orbits;
  /// Each listed type (T1..T4) falls in a distinct orbit.
  bool types_cover_orbits = false;
  /// Every 5-subset attachment creates a prism.
  bool five_always_prism = false;
};
AttachmentAnalysis analyze_attachments();

struct PairAnalysis {
  /// Canonical graph6 of every prism-free two-vertex configuration.
  std::vector<std::string> classes;
  bool xy_never_edge = false;
  bool three_always_prism = false;
};
PairAnalysis analyze_attachment_pairs();

}  // namespace attachments

/// Joined-side configurations at minimum size (sides of 2k+1 vertices).
Graph joined_sides_with_edges(int k);
Graph joined_sides_with_apex(int k);

}  // namespace oddprism
