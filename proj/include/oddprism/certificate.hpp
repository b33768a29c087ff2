#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace oddprism {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Verdict {
  pass,
  fail,
  /// The claim's hypothesis cannot be met by any finite check.
  unverified_regime,
  /// The oracle stopped early (node budget), so nothing can be asserted.
  inconclusive,
};

std::string to_string(Verdict v);

struct Certificate {
  std::string claim_id;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json expected = nlohmann::json::object();
  nlohmann::json observed = nlohmann::json::object();
  Verdict verdict = Verdict::fail;
  nlohmann::json provenance = nlohmann::json::object();
};

nlohmann::json to_json(const Certificate& c);

/// Writes via a temporary file in the same directory and a rename, so a
/// reader never sees a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// File name used for a claim id ("thm1.2/n=8" -> "thm1.2_n=8.json").
std::string certificate_file_name(const std::string& claim_id);

/// One JSON file per certificate plus index.json, sorted by claim id.
void write_bundle(const std::filesystem::path& dir, std::vector<Certificate> certs,
                  const nlohmann::json& extra_index = nlohmann::json::object());

bool any_failed(const std::vector<Certificate>& certs);

}  // namespace oddprism
