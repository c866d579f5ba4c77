#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Composable output filter for exhaustive generation. max_degree,
// alpha_at_most, forbidden_subgraphs and exact_edges (by remaining-capacity
// arithmetic) also prune during augmentation because they are hereditary
// under vertex deletion; min_degree and min_connectivity apply only to
// finished graphs.
struct GraphFilter {
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::optional<int> exact_edges;
    std::optional<int> alpha_at_most;
    std::optional<int> min_connectivity;
    std::vector<Graph> forbidden_subgraphs;

    bool passes(const Graph& g) const;  // full re-check on a finished graph
};

// One representative per isomorphism class on n vertices satisfying the
// filter, emitted in canonical-form order. Generation is by canonical
// augmentation: a child is accepted only if removing the vertex at the last
// canonical position gives back the parent's isomorphism class. 1 <= n <= 10.
void all_graphs(int n, const GraphFilter& filter,
                const std::function<void(const Graph&)>& sink);
std::vector<Graph> all_graphs_list(int n, const GraphFilter& filter);
std::uint64_t count_graphs(int n, const GraphFilter& filter);

}  // namespace minorforge
