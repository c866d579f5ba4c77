#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"

namespace minorforge {

struct Coloring {
    std::vector<int> color;  // one entry per vertex, colors are >= 0

    int palette_size() const;
    bool proper(const Graph& g) const;
};

struct ChromaticResult {
    std::optional<int> chi;  // empty when the node budget ran out
    int lower = 0;           // bounds valid either way
    int upper = 0;
    Coloring coloring;       // proper with `upper` colors
    std::uint64_t nodes = 0;

    bool exact() const { return chi.has_value(); }
};

inline constexpr std::uint64_t kDefaultChromaticBudget = 50'000'000;

// Exact chromatic number by branch and bound: clique lower bound, greedy
// degeneracy upper bound, then saturation-guided color assignment with
// new-color symmetry breaking. Budget exhaustion yields bounds only.
// Requires n <= 20.
ChromaticResult exact_chromatic(const Graph& g,
                                std::uint64_t node_budget = kDefaultChromaticBudget);

// Greedy coloring in reverse minimum-degree elimination order; uses at most
// degeneracy(g) + 1 colors.
Coloring greedy_degeneracy_coloring(const Graph& g);

// A two-colored path extraction instance: apex x, an independent set S
// inside N(x), a set M of missing edges of G[N(x) \ S], and a proper
// coloring of the contraction G/(S u {x}) in which the merged vertex (the
// lowest index of S u {x} after contraction) has color 0.
struct KempeInstance {
    Graph g;
    int x = 0;
    std::vector<int> s;
    std::vector<std::pair<int, int>> m;
    Coloring contraction_coloring;
};

struct KempePath {
    int u = 0, v = 0;          // endpoints, an M pair
    std::vector<int> vertices;  // u first, v last, internal outside N[x]
};

struct PathSet {
    std::vector<KempePath> paths;
    Coloring lifted;  // the coloring of G minus x the paths live in
};

// The shortcut branch: the palette extends to all of G (x included).
struct ExtensionFound {
    Coloring coloring;
};

using KempeOutcome = std::variant<PathSet, ExtensionFound>;

// Follows the two-colored component argument. If some nonzero palette color
// is absent from N(x) \ S, x takes it (ExtensionFound). Otherwise, for each
// M pair, its two end colors must each occur exactly once on N(x) \ S
// (std::invalid_argument if not); either the endpoints lie in different
// components of the two-colored subgraph, in which case swapping one
// component frees a color for x (ExtensionFound), or the connecting path is
// returned and its interior avoids N[x]. Paths for M pairs with four
// distinct endpoints are vertex-disjoint by construction.
KempeOutcome kempe_paths(const KempeInstance& inst);

struct SevenColorOutcome {
    std::optional<Coloring> coloring;      // proper with <= 7 colors
    std::optional<MinorEmbedding> minor;   // (8,4)-family witness
    bool unresolved = false;               // budget ran out before either
    // exact mode only: chi >= 8 proven and the exhaustive minor search still
    // came back empty, contradicting the dichotomy this tool checks
    bool theorem_falsified = false;
};

// Exact mode (n <= 16): exact chi, then exhaustive (8,4) minor search when
// chi >= 8. Heuristic mode (n > 16): degeneracy greedy plus Kempe-chain
// class elimination, then a budgeted minor search; may return unresolved but
// never a wrong certificate.
SevenColorOutcome seven_color_or_minor(const Graph& g,
                                       std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace minorforge
