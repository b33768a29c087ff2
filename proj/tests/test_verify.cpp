#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "oddprism/canonical.hpp"
#include "oddprism/constructions.hpp"
#include "oddprism/verify.hpp"

using namespace oddprism;
namespace fs = std::filesystem;

namespace {

std::string dump_all(const std::vector<Certificate>& certs) {
  std::string out;
  for (const Certificate& c : certs) out += to_json(c).dump() + "\n";
  return out;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("oddprism_test_" + name);
  fs::remove_all(dir);
  return dir;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::pass) == "pass");
  CHECK(to_string(Verdict::fail) == "fail");
  CHECK(to_string(Verdict::unverified_regime) == "unverified-regime");
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
  CHECK(certificate_file_name("thm1.2/n=8") == "thm1.2_n=8.json");
}

TEST_CASE("quick profile passes every claim group") {
  for (const std::string& name : claim_names()) {
    if (name == "all") continue;
    CAPTURE(name);
    const Report r = run_claim(name, Profile::quick, {});
    CHECK_FALSE(r.certificates.empty());
    for (const Certificate& c : r.certificates) {
      CAPTURE(c.claim_id);
      CHECK(c.verdict != Verdict::fail);
      CHECK(c.verdict != Verdict::inconclusive);
    }
  }
  CHECK_THROWS_AS(run_claim("thm9.9", Profile::quick, {}), GraphError);
}

TEST_CASE("prism-free extremal sets at n = 6 and n = 7") {
  const auto six = verify_prism_extremal_sets(6, {}, 6);
  REQUIRE(six.size() == 1);
  CHECK(six[0].verdict == Verdict::pass);
  const std::set<std::string> want{canonical_bytes(fixture::g1()), canonical_bytes(h_construction(6, 3))};
  std::set<std::string> observed;
  for (const auto& entry : six[0].observed["extremal"]) observed.insert(entry["graph6"].get<std::string>());
  CHECK(observed == want);
  const auto seven = verify_prism_extremal_sets(7, {}, 7);
  CHECK(seven[0].observed["extremal"].size() == 4);
  CHECK(seven[0].verdict == Verdict::pass);
}

TEST_CASE("full profile covers every residue class up to n = 14") {
  const Report r = run_claim("thm1.3", Profile::full, {});
  REQUIRE(r.certificates.size() == static_cast<std::size_t>(kFullProfileOrder - 5));
  for (const Certificate& c : r.certificates) {
    CAPTURE(c.claim_id);
    CHECK(c.verdict == Verdict::pass);
  }
  // n = 13: both F_13^{7,j} and H_13^6 appear and nothing else
  const auto thirteen = verify_prism_extremal_sets(13, {}, 13);
  CHECK(thirteen[0].observed["class_count"] == 4);
  CHECK(thirteen[0].verdict == Verdict::pass);
}

TEST_CASE("below n = 9 the P6 square claim is marked unverified") {
  CHECK(verify_p6square_agreement(6).verdict == Verdict::unverified_regime);
  CHECK(verify_p6square_agreement(8).verdict == Verdict::unverified_regime);
}

TEST_CASE("node budget yields inconclusive, never pass or fail") {
  VerifyOptions opts;
  opts.node_budget = 20;
  const auto certs = verify_prism_values(8, opts, 8);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].verdict == Verdict::inconclusive);
}

TEST_CASE("attachment analysis around P6 square") {
  const auto missing = attachments::missing_pairs();
  REQUIRE(missing.size() == 6);
  CHECK(missing[0] == Edge{fixture::v1, fixture::v4});
  CHECK(missing[5] == Edge{fixture::v3, fixture::v6});
  CHECK(attachments::p6square_automorphisms().size() == 2);

  const auto a = attachments::analyze_attachments();
  CHECK(a.automorphism_count == 2);
  CHECK(a.orbits.size() == 4);
  CHECK(a.types_cover_orbits);
  CHECK(a.five_always_prism);

  const auto p = attachments::analyze_attachment_pairs();
  const std::vector<std::string> want_classes = [] {
    std::vector<std::string> v{canonical_bytes(fixture::h1()), canonical_bytes(fixture::h2())};
    std::sort(v.begin(), v.end());
    return v;
  }();
  CHECK(p.classes == want_classes);
  CHECK(p.xy_never_edge);
  CHECK(p.three_always_prism);
}

TEST_CASE("certificates are byte-identical across worker counts") {
  const int most = static_cast<int>(std::max(2U, std::thread::hardware_concurrency()));
  std::string reference;
  for (int threads : {1, 2, most}) {
    VerifyOptions opts;
    opts.threads = threads;
    std::vector<Certificate> certs = verify_prism_values(8, opts);
    for (auto& c : verify_prism_extremal_sets(8, opts)) certs.push_back(std::move(c));
    for (auto& c : verify_decomposition_families(2, opts)) certs.push_back(std::move(c));
    const std::string text = dump_all(certs);
    if (reference.empty()) {
      reference = text;
    } else {
      CHECK(text == reference);
    }
  }
}

TEST_CASE("timing is opt-in") {
  VerifyOptions timed;
  timed.timing = true;
  const auto with = verify_prism_values(5, timed, 5);
  const auto without = verify_prism_values(5, {}, 5);
  CHECK(with[0].provenance.dump() != without[0].provenance.dump());
  CHECK(to_json(without[0]).dump() == to_json(verify_prism_values(5, {}, 5)[0]).dump());
}

TEST_CASE("bundle layout") {
  const fs::path dir = scratch_dir("bundle");
  Certificate a;
  a.claim_id = "z/last";
  a.verdict = Verdict::pass;
  Certificate b;
  b.claim_id = "a/first";
  b.verdict = Verdict::fail;
  write_bundle(dir, {a, b}, {{"not_attempted", nlohmann::json::array()}});
  const auto index = read_json(dir / "index.json");
  CHECK(index["tool"] == "oddprism");
  CHECK(index["version"] == kToolVersion);
  CHECK(index["failed"] == 1);
  REQUIRE(index["certificates"].size() == 2);
  CHECK(index["certificates"][0]["claim_id"] == "a/first");
  CHECK(index["certificates"][0]["file"] == "a_first.json");
  CHECK(index.contains("not_attempted"));
  const auto first = read_json(dir / "a_first.json");
  CHECK(first["verdict"] == "fail");
  for (const char* key : {"claim_id", "inputs", "expected", "observed", "verdict", "provenance"}) {
    CHECK(first.contains(key));
  }
  CHECK(any_failed({a, b}));
  CHECK_FALSE(any_failed({a}));

  // rewriting replaces the file and leaves no temporary behind
  write_file_atomic(dir / "x.txt", "one");
  write_file_atomic(dir / "x.txt", "two");
  std::ifstream in(dir / "x.txt");
  std::string text;
  std::getline(in, text);
  CHECK(text == "two");
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
    ++files;
  }
  CHECK(files == 4);
  fs::remove_all(dir);
}
