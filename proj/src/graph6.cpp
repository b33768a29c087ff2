#include "oddprism/graph6.hpp"

namespace oddprism {

namespace {

constexpr int kShortLimit = 62;
constexpr int kLongLimit = 258047;

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw GraphError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw GraphError("graph6: byte out of range");
  }
  auto val = [&](std::size_t i) { return static_cast<int>(static_cast<unsigned char>(text[i])) - 63; };

  std::size_t pos = 0;
  int n = 0;
  if (val(0) <= kShortLimit) {
    n = val(0);
    pos = 1;
  } else {
    if (text.size() < 4 || val(1) == 63) {
      throw GraphError("graph6: unsupported or truncated order field");
    }
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    if (n <= kShortLimit || n > kLongLimit) throw GraphError("graph6: non-canonical order field");
    pos = 4;
  }
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != groups) {
    throw GraphError("graph6: expected " + std::to_string(groups) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }
  Graph g(n);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = val(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = val(text.size() - 1);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw GraphError("graph6: nonzero padding");
  }
  return g;
}

}  // namespace oddprism
