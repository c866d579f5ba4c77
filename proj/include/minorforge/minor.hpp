#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Either an explicit pattern graph or the deficient-clique family (t, s),
// i.e. all graphs obtained from K_t by deleting s edges. The family search
// succeeds iff some member is a minor.
struct PatternSpec {
    std::optional<Graph> pattern;
    int t = 0;
    int s = 0;

    static PatternSpec family(int t, int s);
    static PatternSpec explicit_graph(Graph h);
    bool is_family() const { return !pattern.has_value(); }
    int size() const { return is_family() ? t : pattern->n(); }
    long min_edges() const;
};

// K_t minus one edge / two independent edges / two adjacent edges.
Graph k_minus(int t);
Graph k_equal(int t);
Graph k_less(int t);

struct MinorEmbedding {
    std::vector<std::vector<int>> branch_sets;
    // branch-set index pairs with no connecting host edge (family patterns)
    std::vector<std::pair<int, int>> missing_pairs;
};

enum class SearchStatus { found, no_minor, budget_exceeded };

struct MinorResult {
    SearchStatus status = SearchStatus::no_minor;
    std::optional<MinorEmbedding> embedding;
    std::uint64_t nodes = 0;
    bool found() const { return status == SearchStatus::found; }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Exact branch-set search. Exceeding the node budget is reported as
// budget_exceeded, never as "no minor". Host n <= 64.
MinorResult find_minor(const Graph& g, const PatternSpec& pattern,
                       std::uint64_t node_budget = kDefaultNodeBudget);

// roots[i] is the host vertex that branch set i must contain, or -1.
MinorResult find_rooted_minor(const Graph& g, const Graph& pattern,
                              const std::vector<int>& roots,
                              std::uint64_t node_budget = kDefaultNodeBudget);

// Total certificate checker for every search result.
bool verify_embedding(const Graph& g, const PatternSpec& pattern,
                      const MinorEmbedding& emb);

}  // namespace minorforge
