#pragma once

#include <string>
#include <string_view>

#include "oddprism/graph.hpp"

namespace oddprism {

// graph6: N(n) then the upper triangle x(0,1),x(0,2),x(1,2),x(0,3),...
// packed big-endian into 6-bit groups, each offset by 63.

std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and ignores trailing newline
/// characters. Throws GraphError on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace oddprism
