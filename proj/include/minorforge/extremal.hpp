#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"
#include "minorforge/report.hpp"

namespace minorforge {

// One gluing step: identify a 4-clique of a fresh K_{2,2,2,2} copy
// (vertex indices 0..7 of the fresh copy, fresh[i] maps onto target[i])
// with a 4-clique of the graph built so far.
struct GlueStep {
    std::array<int, 4> target;
    std::array<int, 4> fresh;
};

// A (K_{2,2,2,2}, 4)-cockade: `copies` copies glued along 4-cliques.
// The result has n = 8 + 4(copies-1) vertices and e = 24 + 18(copies-1)
// edges, i.e. 2e = 9n - 24 exactly.
struct CockadeRecipe {
    int copies = 1;
    std::vector<GlueStep> schedule;  // one step per copy after the first

    // chain recipe: each new copy glues its clique {0,2,4,6} onto the
    // four vertices appended by the previous copy
    static CockadeRecipe chain(int copies);
};

// Builds the glued graph. Throws std::invalid_argument if a schedule entry
// is out of range or either side of a glue is not a 4-clique, and
// std::logic_error if the edge count ever deviates from 2e = 9n - 24.
Graph build_cockade(const CockadeRecipe& recipe);

// The boundary property of a cockade: exactly ceil(4.5n - 12) edges, no
// (8,3)-family minor, but an (8,4)-family minor. Budget exhaustion is
// reported as a distinct failed check, never as a refutation.
VerificationReport verify_cockade_tightness(const CockadeRecipe& recipe,
                                            std::uint64_t node_budget = kDefaultNodeBudget);

// `trials` uniform random graphs on n vertices with exactly ceil(4.5n - 12)
// edges; every one must yield an (8,4)-family minor. Per-trial generator
// streams are derived from (seed, n, trial) so results are order
// independent. Requires 8 <= n <= 14.
VerificationReport random_extremal_test(int n, int trials, std::uint64_t seed);

// Exact degeneracy by repeated minimum-degree removal; second component is
// the elimination order (greedy coloring colors it in reverse).
std::pair<int, std::vector<int>> degeneracy(const Graph& g);

// A separation of a host graph: the separator S plus the vertices of the
// two sides. Every vertex lies in exactly one of the three lists and no
// edge joins side1 to side2.
struct SeparatorInstance {
    Graph g;
    std::vector<int> separator;
    std::vector<int> side1;
    std::vector<int> side2;
};

// Throws std::invalid_argument if the instance is not a valid separation.
void check_separator_instance(const SeparatorInstance& inst);

// The maximum number of separator pairs nonadjacent in G[S] that become
// adjacent after contracting disjoint connected sets on the given side
// (1 or 2), each containing exactly one vertex of S. Exact branch and
// bound; throws std::length_error if the side has more than 16 vertices.
int contraction_gain(const SeparatorInstance& inst, int side);

// e(G[S]) + d1 >= 5 over every 4-cut instance: exhaustively for all
// 4-connected hosts with n <= 9 and every separating 4-set and side
// assignment with |G1| >= 6, plus `samples_per_n` randomly constructed
// 4-connected instances at n = 10 and n = 11.
VerificationReport verify_jorgensen(int samples_per_n, std::uint64_t seed);

}  // namespace minorforge
