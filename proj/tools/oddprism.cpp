// oddprism: command-line front end for constructions, containment checks,
// Turán formulas, decomposition families, exhaustive search and the claim
// verifier.
//
// Exit codes: 0 success / free / pass, 1 contains / fail, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddprism/canonical.hpp"
#include "oddprism/certificate.hpp"
#include "oddprism/containment.hpp"
#include "oddprism/decomposition.hpp"
#include "oddprism/formulas.hpp"
#include "oddprism/graph6.hpp"
#include "oddprism/names.hpp"
#include "oddprism/search.hpp"
#include "oddprism/verify.hpp"

using namespace oddprism;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int thread_count(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw UsageError("--threads must be at least 1");
    return *flag;
  }
  if (const char* env = std::getenv("ODDPRISM_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("ODDPRISM_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Graph read_graph(const std::string& text) {
  if (text == "-") {
    std::string in((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return graph_from_text(in);
  }
  return graph_from_text(text);
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"order", g.order()}, {"edge_count", g.edge_count()}, {"graph6", to_graph6(g)}, {"edges", edges}};
}

void emit(const std::string& text, const std::optional<std::string>& out) {
  if (out) {
    write_file_atomic(*out, text);
  } else {
    std::cout << text;
  }
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
  std::string name;
  std::vector<std::string> params;
  std::string format = "text";
};

int run_construct(const ConstructArgs& a) {
  std::string spec = a.name;
  for (const auto& p : a.params) spec += ":" + p;
  Graph g;
  // Long construction names (complete, turan, path_power, ...) map straight
  // onto build(); everything else goes through the short grammar.
  std::vector<int> ints;
  bool all_ints = true;
  for (const auto& p : a.params) {
    try {
      std::size_t used = 0;
      ints.push_back(std::stoi(p, &used));
      all_ints = all_ints && used == p.size();
    } catch (const std::exception&) {
      all_ints = false;
    }
  }
  std::optional<ConstructionSpec> named;
  try {
    named = parse_graph_name(spec);
  } catch (const GraphError&) {
  }
  if (named) {
    g = build(*named);
  } else if (all_ints && !a.params.empty()) {
    g = build(ConstructionSpec{a.name, ints});
  } else {
    g = graph_from_text(spec);
  }
  if (a.format == "graph6") {
    std::cout << to_graph6(g) << "\n";
  } else if (a.format == "json") {
    json j = graph_json(g);
    j["name"] = spec;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << spec << ": " << describe(g) << "\n";
    for (const Edge& e : g.edges()) std::cout << e.u << " " << e.v << "\n";
  }
  return kExitOk;
}

// ---- check --------------------------------------------------------------

struct CheckArgs {
  std::string host;
  std::string pattern;
  bool witness = false;
  std::string format = "text";
};

int run_check(const CheckArgs& a) {
  const Graph host = read_graph(a.host);
  const Graph pattern = read_graph(a.pattern);
  const auto emb = contains(host, pattern);
  if (a.format == "json") {
    json j = {{"host", to_graph6(host)}, {"pattern", to_graph6(pattern)}, {"contains", emb.has_value()}};
    if (emb && a.witness) j["embedding"] = *emb;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (emb ? "contains" : "free") << "\n";
    if (emb && a.witness) {
      std::cout << "embedding:";
      for (Vertex v : *emb) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return emb ? kExitFound : kExitOk;
}

// ---- formula ------------------------------------------------------------

struct FormulaArgs {
  std::string name;
  std::vector<int> args;
  std::string format = "text";
};

int run_formula(const FormulaArgs& a) {
  auto need = [&](std::size_t k) {
    if (a.args.size() != k) {
      throw UsageError("formula " + a.name + " takes " + std::to_string(k) + " argument(s)");
    }
  };
  FormulaValue f;
  if (a.name == "c3prism") {
    need(1);
    f = c3prism_turan(a.args[0]);
  } else if (a.name == "p6square") {
    need(1);
    f = p6square_turan(a.args[0]);
  } else if (a.name == "p4") {
    need(1);
    f = p4_turan(a.args[0]);
  } else if (a.name == "path") {
    need(2);
    f = path_turan(a.args[0], a.args[1]);
  } else if (a.name == "main") {
    need(1);
    f = main_theorem_value(a.args[0]);
  } else if (a.name == "mantel") {
    need(1);
    f.value = mantel(a.args[0]);
    f.family.push_back({"turan", {a.args[0], 2}});
  } else {
    throw UsageError("unknown formula '" + a.name + "' (c3prism, p6square, p4, path, main, mantel)");
  }
  json family = json::array();
  for (const auto& s : f.family) family.push_back(to_string(s));
  if (a.format == "json") {
    json j = {{"formula", a.name}, {"args", a.args}, {"value", f.value}, {"family", family}};
    if (f.exception_note) j["exception"] = *f.exception_note;
    if (!f.maximizers.empty()) j["maximizers"] = f.maximizers;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << f.value << "\n";
  std::cout << "family:";
  for (const auto& s : family) std::cout << " " << s.get<std::string>();
  std::cout << "\n";
  if (!f.maximizers.empty()) {
    std::cout << "maximizers:";
    for (int m : f.maximizers) std::cout << " " << m;
    std::cout << "\n";
  }
  if (f.exception_note) std::cout << "exception: " << *f.exception_note << "\n";
  return kExitOk;
}

// ---- decomp -------------------------------------------------------------

struct DecompArgs {
  std::string graph;
  int m_max = 4;
  std::optional<int> t_max;
  std::optional<int> threads;
  std::optional<std::string> out;
};

int run_decomp(const DecompArgs& a) {
  const Graph l = read_graph(a.graph);
  const DecompositionResult d = decomposition_family(l, a.m_max, a.t_max, thread_count(a.threads));
  for (const auto& g6 : d.family) std::cout << g6 << "\n";
  Certificate c;
  c.claim_id = "decomp/" + to_graph6(l);
  c.inputs = {{"L", to_graph6(l)}, {"m_max", d.m_max}, {"t_max", d.t_max}};
  c.observed = {{"family", d.family}, {"p", d.p}, {"candidates", d.candidates}, {"containing_candidates", d.hits}};
  c.verdict = Verdict::pass;
  c.provenance = {{"tool", "oddprism"},
                  {"version", kToolVersion},
                  {"bounds", {{"t_max", d.t_max}, {"t_max_rule", a.t_max ? "user" : "|V(L)|"}, {"m_max", d.m_max}}}};
  const std::string text = to_json(c).dump(2) + "\n";
  if (a.out) write_file_atomic(*a.out, text);
  return kExitOk;
}

// ---- search -------------------------------------------------------------

struct SearchArgs {
  int n = 0;
  std::vector<std::string> forbid;
  bool enumerate = false;
  std::string seed = "auto";
  std::optional<int> threads;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> out;
  std::optional<std::string> g6_out;
  bool allow_large = false;
  bool timing = false;
};

int run_search(const SearchArgs& a) {
  SearchConfig cfg;
  cfg.n = a.n;
  cfg.mode = a.enumerate ? SearchMode::enumerate_extremal : SearchMode::max_only;
  cfg.threads = thread_count(a.threads);
  cfg.node_budget = a.budget;
  cfg.allow_large = a.allow_large;
  for (const auto& f : a.forbid) cfg.forbidden.emplace_back(read_graph(f), f);
  json bounds = {{"mode", a.enumerate ? "enumerate-extremal" : "max-only"}, {"feasibility_guard", kFeasibleOrder}};
  if (a.seed == "auto") {
    if (a.n <= Graph::kWordOrder) {
      if (auto s = construction_seed(a.n, cfg.forbidden)) {
        cfg.seed_witness = s->graph;
        bounds["seed_lower_bound"] = s->edges;
        bounds["seed_construction"] = to_string(s->spec);
      }
    }
  } else if (a.seed != "none") {
    try {
      cfg.seed_lower_bound = std::stoll(a.seed);
    } catch (const std::exception&) {
      throw UsageError("--seed-bound expects auto, none or an edge count");
    }
    bounds["seed_lower_bound"] = *cfg.seed_lower_bound;
  }
  if (a.budget) bounds["node_budget"] = *a.budget;

  const SearchResult r = turan_exact(cfg);

  Certificate c;
  c.claim_id = "search/n=" + std::to_string(a.n);
  c.inputs = {{"n", a.n}, {"forbidden", a.forbid}};
  c.observed = {{"max_edges", r.max_edges}, {"exhaustive", r.exhaustive}};
  if (a.enumerate) c.observed["extremal"] = r.extremal;
  c.verdict = r.exhaustive ? Verdict::pass : Verdict::inconclusive;
  c.provenance = {{"tool", "oddprism"}, {"version", kToolVersion}, {"bounds", bounds}};
  if (a.timing) {
    c.provenance["runtime_seconds"] = r.wall_time_seconds;
    c.provenance["nodes_explored"] = r.nodes_explored;
    c.provenance["pruned_by_bound"] = r.pruned_by_bound;
    c.provenance["threads"] = cfg.threads;
  }
  const std::string text = to_json(c).dump(2) + "\n";
  if (a.out) {
    write_file_atomic(*a.out, text);
    std::cout << "max_edges " << r.max_edges << (r.exhaustive ? "" : " (non-exhaustive)") << "\n";
    for (const auto& g6 : r.extremal) std::cout << g6 << "\n";
  } else {
    std::cout << text;
  }
  if (a.g6_out) {
    std::string list;
    const std::vector<std::string> graphs =
        a.enumerate ? r.extremal : (r.witness ? std::vector<std::string>{*r.witness} : std::vector<std::string>{});
    for (const auto& g6 : graphs) list += g6 + "\n";
    write_file_atomic(*a.g6_out, list);
  }
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string claim = "all";
  std::string profile = "quick";
  std::optional<std::string> out;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<int> threads;
  std::optional<std::uint64_t> budget;
  bool timing = false;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions opts;
  opts.threads = thread_count(a.threads);
  opts.timing = a.timing;
  opts.node_budget = a.budget;
  const Profile profile = a.profile == "full" ? Profile::full : Profile::quick;
  const Report r = run_claim(a.claim, profile, opts, a.n, a.n_max);
  for (const Certificate& c : r.certificates) {
    std::string tag = to_string(c.verdict);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::cout << tag << "  " << c.claim_id << "\n";
    if (c.observed.contains("extremal") && c.observed["extremal"].is_array()) {
      for (const auto& e : c.observed["extremal"]) {
        std::cout << "    " << e["graph6"].get<std::string>();
        for (const auto& m : e["matches"]) std::cout << " " << m.get<std::string>();
        std::cout << "\n";
      }
    }
  }
  for (const auto& skip : r.not_attempted) {
    std::cout << "NOT-ATTEMPTED  " << skip["claim"].get<std::string>() << "  (" << skip["reason"].get<std::string>()
              << ")\n";
  }
  if (a.out) {
    write_bundle(*a.out, r.certificates, {{"profile", a.profile}, {"not_attempted", r.not_attempted}});
  }
  return any_failed(r.certificates) ? kExitFound : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oddprism: Turán numbers of odd prisms and related graphs\n"
               "Graph arguments: " +
               graph_grammar()};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a named graph");
  construct->add_option("name", ca.name, "Construction name or grammar form (e.g. prism, H:8:3)")->required();
  construct->add_option("params", ca.params, "Integer parameters");
  construct->add_option("--format", ca.format, "text | json | graph6")
      ->check(CLI::IsMember({"text", "json", "graph6"}));

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Does the host contain the pattern as a subgraph?");
  check->add_option("--host", ck.host, "Host graph (name, graph6 or -)")->required();
  check->add_option("--pattern", ck.pattern, "Pattern graph (name, graph6 or -)")->required();
  check->add_flag("--witness", ck.witness, "Print an embedding when found");
  check->add_option("--format", ck.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  FormulaArgs fa;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form Turán number");
  formula->add_option("name", fa.name, "c3prism | p6square | p4 | path | main | mantel")->required();
  formula->add_option("args", fa.args, "Order (and path length for path)");
  formula->add_option("--format", fa.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  DecompArgs da;
  auto* decomp = app.add_subcommand("decomp", "Decomposition family of a non-bipartite graph");
  decomp->add_option("--graph", da.graph, "Graph L")->required();
  decomp->add_option("--m-max", da.m_max, "Largest candidate order")->check(CLI::PositiveNumber);
  decomp->add_option("--t-max", da.t_max, "Largest t (default |V(L)|)")->check(CLI::PositiveNumber);
  decomp->add_option("--threads", da.threads, "Worker threads");
  decomp->add_option("--out", da.out, "Write the certificate here");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exact Turán number by exhaustive search");
  search->add_option("--n", sa.n, "Order")->required()->check(CLI::NonNegativeNumber);
  search->add_option("--forbid", sa.forbid, "Forbidden graph (repeatable)")->required();
  search->add_flag("--enumerate", sa.enumerate, "List every extremal graph");
  search->add_option("--seed-bound", sa.seed, "auto | none | edge count");
  search->add_option("--threads", sa.threads, "Worker threads");
  search->add_option("--budget", sa.budget, "Node budget");
  search->add_option("--out", sa.out, "Write the JSON certificate here");
  search->add_option("--g6-out", sa.g6_out, "Write extremal graphs (graph6, one per line)");
  search->add_flag("--allow-large", sa.allow_large, "Run above the feasibility guard");
  search->add_flag("--timing", sa.timing, "Record runtime and node statistics");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check claims and write certificates");
  std::string claims;
  for (const auto& c : claim_names()) claims += (claims.empty() ? "" : " | ") + c;
  verify->add_option("claim", va.claim, claims)->check(CLI::IsMember(claim_names()));
  verify->add_option("--profile", va.profile, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--out", va.out, "Certificate bundle directory");
  verify->add_option("--n", va.n, "Single order for thm1.2 / thm1.3 / thm5.1");
  verify->add_option("--n-max", va.n_max, "Largest order");
  verify->add_option("--threads", va.threads, "Worker threads");
  verify->add_option("--budget", va.budget, "Node budget per search");
  verify->add_flag("--timing", va.timing, "Record runtimes in provenance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "graph arguments: " << graph_grammar() << "\n";
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*check) return run_check(ck);
    if (*formula) return run_formula(fa);
    if (*decomp) return run_decomp(da);
    if (*search) return run_search(sa);
    if (*verify) return run_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\ngraph arguments: " << graph_grammar() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
