#include "oddprism/names.hpp"

#include <charconv>
#include <vector>

#include "oddprism/graph6.hpp"

namespace oddprism {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

int to_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw GraphError("bad integer '" + std::string(s) + "' in graph name '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::optional<ConstructionSpec> parse_graph_name(std::string_view text) {
  for (const char* f : {"G1", "G2", "G3", "H1", "H2"}) {
    if (text == f) return ConstructionSpec{f, {}};
  }
  const auto parts = split(text, ':');
  if (parts.size() < 2) return std::nullopt;
  const std::string_view head = parts[0];
  std::vector<int> args;
  for (std::size_t i = 1; i < parts.size(); ++i) args.push_back(to_int(parts[i], text));
  auto expect = [&](std::size_t k, const char* form) {
    if (args.size() != k) throw GraphError("graph name '" + std::string(text) + "' should look like " + form);
  };

  if (head.size() > 2 && head.substr(0, 2) == "P^") {
    expect(1, "P^p:k");
    return ConstructionSpec{"path_power", {args[0], to_int(head.substr(2), text)}};
  }
  if (head == "prism") { expect(1, "prism:k"); return ConstructionSpec{"prism", args}; }
  if (head == "H") { expect(2, "H:n:i"); return ConstructionSpec{"H", args}; }
  if (head == "F") { expect(3, "F:n:i:j"); return ConstructionSpec{"F", args}; }
  if (head == "T") { expect(2, "T:n:r"); return ConstructionSpec{"turan", args}; }
  if (head == "K") {
    if (args.size() == 1) return ConstructionSpec{"complete", args};
    expect(2, "K:n or K:s:t");
    return ConstructionSpec{"complete_bipartite", args};
  }
  if (head == "C") { expect(1, "C:n"); return ConstructionSpec{"cycle", args}; }
  if (head == "P") { expect(1, "P:n"); return ConstructionSpec{"path", args}; }
  if (head == "E") { expect(1, "E:n"); return ConstructionSpec{"empty", args}; }
  if (head == "S") { expect(1, "S:l"); return ConstructionSpec{"star", args}; }
  if (head == "H3") { expect(1, "H3:n"); return ConstructionSpec{"H3", args}; }
  if (head == "H4") { expect(1, "H4:n"); return ConstructionSpec{"H4", args}; }
  if (head == "p4ext") { expect(2, "p4ext:n:v"); return ConstructionSpec{"p4_extremal", args}; }
  if (head == "pathext") { expect(3, "pathext:n:k:v"); return ConstructionSpec{"path_extremal", args}; }
  if (head == "main") { expect(3, "main:n:na:v"); return ConstructionSpec{"main_extremal", args}; }
  return std::nullopt;
}

Graph graph_from_text(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (auto spec = parse_graph_name(text)) return build(*spec);
  return from_graph6(text);
}

std::string graph_grammar() {
  return "prism:k H:n:i F:n:i:j P^p:k T:n:r K:n K:s:t C:n P:n E:n S:l H3:n H4:n p4ext:n:v "
         "pathext:n:k:v main:n:na:v G1 G2 G3 H1 H2, or graph6 ('-' reads stdin)";
}

}  // namespace oddprism
