#include "oddprism/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <system_error>

namespace oddprism {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unverified_regime: return "unverified-regime";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "fail";
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["claim_id"] = c.claim_id;
  j["inputs"] = c.inputs;
  j["expected"] = c.expected;
  j["observed"] = c.observed;
  j["verdict"] = to_string(c.verdict);
  j["provenance"] = c.provenance;
  return j;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::create_directories(dir);
  std::random_device rd;
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move report into place at " + path.string() + ": " + ec.message());
  }
}

std::string certificate_file_name(const std::string& claim_id) {
  std::string name;
  for (char ch : claim_id) {
    const bool keep = std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '=' || ch == '-' ||
                      ch == '_' || ch == '^';
    name += keep ? ch : '_';
  }
  return name + ".json";
}

void write_bundle(const std::filesystem::path& dir, std::vector<Certificate> certs,
                  const nlohmann::json& extra_index) {
  std::sort(certs.begin(), certs.end(),
            [](const Certificate& a, const Certificate& b) { return a.claim_id < b.claim_id; });
  nlohmann::json index;
  index["tool"] = "oddprism";
  index["version"] = kToolVersion;
  nlohmann::json entries = nlohmann::json::array();
  std::size_t failed = 0;
  for (const Certificate& c : certs) {
    const std::string file = certificate_file_name(c.claim_id);
    write_file_atomic(dir / file, to_json(c).dump(2) + "\n");
    entries.push_back({{"claim_id", c.claim_id}, {"verdict", to_string(c.verdict)}, {"file", file}});
    if (c.verdict == Verdict::fail) ++failed;
  }
  index["certificates"] = entries;
  index["failed"] = failed;
  for (const auto& [k, v] : extra_index.items()) index[k] = v;
  write_file_atomic(dir / "index.json", index.dump(2) + "\n");
}

bool any_failed(const std::vector<Certificate>& certs) {
  return std::any_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.verdict == Verdict::fail; });
}

}  // namespace oddprism
