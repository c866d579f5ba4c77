#pragma once

#include "minorforge/graph.hpp"

namespace minorforge {

// Exact vertex connectivity via Menger: unit-capacity max flow on the
// vertex-split digraph, minimized over nonadjacent pairs. kappa(K_n) = n - 1
// by convention. Requires 2 <= n <= 64.
int vertex_connectivity(const Graph& g);

// Maximum number of internally vertex-disjoint s-t paths (s, t nonadjacent).
int disjoint_path_count(const Graph& g, int s, int t);

}  // namespace minorforge
