#pragma once

#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Exact maximum clique via branch-and-bound with bitset candidate pruning.
// All functions require n <= 64.
std::vector<int> max_clique(const Graph& g);
int clique_number(const Graph& g);
int independence_number(const Graph& g);

// All k-cliques, each as an ascending vertex list.
std::vector<std::vector<int>> find_k_cliques(const Graph& g, int k);

}  // namespace minorforge
