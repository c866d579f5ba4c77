#pragma once

#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Exact canonical form: canonical_form(G) == canonical_form(H) iff G and H
// are isomorphic. Defined as the lexicographically largest adjacency bit
// string over all vertex orderings, found by branch-and-bound with twin
// collapsing. Requires n <= 64; intended use is n <= 16.
std::string canonical_form(const Graph& g);

// The deterministic vertex ordering realizing canonical_form:
// order[k] is the vertex placed at canonical position k.
std::vector<int> canonical_order(const Graph& g);

Graph canonical_relabel(const Graph& g);

}  // namespace minorforge
