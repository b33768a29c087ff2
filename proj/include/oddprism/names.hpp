#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "oddprism/constructions.hpp"

namespace oddprism {

// Named-graph grammar used on the command line:
//   prism:k  H:n:i  F:n:i:j  P^p:k  T:n:r  K:n  K:s:t  C:n  P:n  E:n  S:l
//   H3:n  H4:n  p4ext:n:v  pathext:n:k:v  main:n:na:v  G1 G2 G3 H1 H2
// Anything else is read as graph6.

/// The construction a name refers to, or nullopt if it is not a name.
/// Throws GraphError for a recognised prefix with bad parameters.
std::optional<ConstructionSpec> parse_graph_name(std::string_view text);

/// Name or graph6.
Graph graph_from_text(std::string_view text);

/// One-line grammar summary for usage messages.
std::string graph_grammar();

}  // namespace oddprism
