#pragma once

#include <optional>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Injective map phi with uv in E(H) implying phi(u)phi(v) in E(G), or nullopt
// if none exists. Backtracking with degree and adjacency pruning; requires
// host n <= 64.
std::optional<std::vector<int>> subgraph_embed(const Graph& h, const Graph& g);

}  // namespace minorforge
