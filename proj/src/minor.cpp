#include "minorforge/minor.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minorforge {

namespace {

using std::uint64_t;

uint64_t bit(int v) { return uint64_t{1} << v; }
uint64_t ge_mask(int v) { return ~(bit(v) - 1); }

// Branch sets are built one at a time, each grown as a connected subset of
// the remaining vertices. Interchangeable family sets are canonicalized by
// requiring strictly increasing set minima, which also retires all vertices
// below the current minimum. Connected subsets are enumerated once each via
// the usual include/forbid extension scheme.
struct MinorSearch {
    int n = 0;
    std::vector<uint64_t> adj;
    int t = 0;
    bool family = false;
    int s_budget = 0;
    std::vector<uint64_t> pat_pos;   // pattern adjacency among processing positions
    std::vector<int> root_of;        // host root per position, -1 if free
    std::vector<int> pos_to_pattern; // processing position -> pattern vertex

    uint64_t budget = 0, nodes = 0;
    bool exceeded = false;
    bool success = false;

    std::vector<uint64_t> sets, nbrs, out_sets;
    int missing_used = 0;

    void search_set(int i, uint64_t usable) {
        if (success || exceeded) return;
        if (i == t) {
            out_sets = sets;
            success = true;
            return;
        }
        if (std::popcount(usable) < t - i) return;
        if (!family && root_of[i] >= 0) {
            int r = root_of[i];
            if (!((usable >> r) & 1)) return;
            grow(i, bit(r), adj[r] & ~bit(r), 0, usable & ~bit(r), usable);
            return;
        }
        for (uint64_t m = usable; m && !success && !exceeded;) {
            int r = std::countr_zero(m);
            m &= m - 1;
            uint64_t ge = usable & ge_mask(r) & ~bit(r);
            // family: vertices below the chosen minimum are dead for all
            // later sets as well; explicit: only this set is constrained
            uint64_t fut_base = family ? ge : usable & ~bit(r);
            // in family mode everything below r is dead from here on, so
            // too few vertices at or above r ends the root loop; explicit
            // sets leave the low vertices usable for later positions
            if (family && std::popcount(ge | bit(r)) < t - i) break;
            grow(i, bit(r), adj[r] & ~bit(r), 0, ge, fut_base | bit(r));
        }
    }

    // S: current branch set; nbr: N(S) \ S; ext_universe: vertices S may
    // still absorb; fut_base: vertices usable by this and later sets.
    void grow(int i, uint64_t S, uint64_t nbr, uint64_t forbidden,
              uint64_t ext_universe, uint64_t fut_base) {
        if (success || exceeded) return;
        if (++nodes > budget) {
            exceeded = true;
            return;
        }
        uint64_t fut = fut_base & ~S;
        int need_future = t - i - 1;
        int fc = std::popcount(fut);
        if (fc < need_future) return;

        try_complete(i, S, nbr, fut, need_future);

        if (fc == need_future) return;  // extensions would starve later sets
        uint64_t ext = nbr & ext_universe & ~forbidden;
        while (ext && !success && !exceeded) {
            int x = std::countr_zero(ext);
            ext &= ext - 1;
            uint64_t S2 = S | bit(x);
            grow(i, S2, (nbr | adj[x]) & ~S2, forbidden, ext_universe, fut_base);
            forbidden |= bit(x);
        }
    }

    void try_complete(int i, uint64_t S, uint64_t nbr, uint64_t fut,
                      int need_future) {
        int miss_i = 0;
        if (family) {
            for (int j = 0; j < i; ++j)
                if (!(nbr & sets[j])) ++miss_i;
            if (missing_used + miss_i > s_budget) return;
        } else {
            for (int j = 0; j < i; ++j)
                if (((pat_pos[i] >> j) & 1) && !(nbr & sets[j])) return;
        }

        // feasibility of the remaining sets
        if (family) {
            int forced = 0;
            for (int j = 0; j < i; ++j)
                forced += std::max(0, need_future - std::popcount(nbrs[j] & fut));
            forced += std::max(0, need_future - std::popcount(nbr & fut));
            if (missing_used + miss_i + forced > s_budget) return;
        } else {
            uint64_t future_pos = 0;
            for (int k = i + 1; k < t; ++k) {
                future_pos |= bit(k);
                int rk = root_of[k];
                if (rk >= 0 && !((fut >> rk) & 1)) return;
            }
            for (int j = 0; j <= i; ++j) {
                int fj = std::popcount(pat_pos[j] & future_pos);
                uint64_t nj = j == i ? nbr : nbrs[j];
                if (std::popcount(nj & fut) < fj) return;
            }
        }

        sets[i] = S;
        nbrs[i] = nbr;
        missing_used += miss_i;
        search_set(i + 1, fut);
        missing_used -= miss_i;
    }
};

MinorResult run_search(const Graph& g, const PatternSpec& pattern,
                       const std::vector<int>& roots, uint64_t node_budget) {
    MinorResult result;
    int t = pattern.size();
    if (t < 1) throw std::invalid_argument("pattern must have at least one vertex");
    if (pattern.is_family()) {
        if (pattern.t < 2) throw std::invalid_argument("family needs t >= 2");
        if (pattern.s < 0 || pattern.s > pattern.t * (pattern.t - 1) / 2)
            throw std::invalid_argument("family needs 0 <= s <= C(t,2)");
    }
    if (g.n() < t || g.edge_count() < pattern.min_edges()) return result;

    MinorSearch search;
    search.n = g.n();
    search.adj = adjacency64(g);
    search.t = t;
    search.budget = node_budget;
    search.family = pattern.is_family();
    search.sets.assign(t, 0);
    search.nbrs.assign(t, 0);
    if (search.family) {
        search.s_budget = pattern.s;
    } else {
        const Graph& h = *pattern.pattern;
        // processing order: rooted pattern vertices first, then by
        // descending degree so dense pattern parts fail fast
        std::vector<int> order(t);
        for (int v = 0; v < t; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            bool ra = roots[a] >= 0, rb = roots[b] >= 0;
            if (ra != rb) return ra;
            return h.degree(a) > h.degree(b);
        });
        std::vector<int> pos_of(t);
        for (int i = 0; i < t; ++i) pos_of[order[i]] = i;
        search.pos_to_pattern = order;
        search.pat_pos.assign(t, 0);
        for (auto [u, v] : h.edges()) {
            search.pat_pos[pos_of[u]] |= bit(pos_of[v]);
            search.pat_pos[pos_of[v]] |= bit(pos_of[u]);
        }
        search.root_of.resize(t);
        for (int i = 0; i < t; ++i) search.root_of[i] = roots[order[i]];
    }

    uint64_t all = g.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n()) - 1;
    search.search_set(0, all);

    result.nodes = search.nodes;
    if (search.success) {
        result.status = SearchStatus::found;
        MinorEmbedding emb;
        emb.branch_sets.assign(t, {});
        for (int i = 0; i < t; ++i) {
            int target = search.family ? i : search.pos_to_pattern[i];
            for (uint64_t m = search.out_sets[i]; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                emb.branch_sets[target].push_back(v);
            }
        }
        if (search.family) {
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j) {
                    bool edge = false;
                    for (int v : emb.branch_sets[i])
                        if (search.adj[v] & search.out_sets[j]) {
                            edge = true;
                            break;
                        }
                    if (!edge) emb.missing_pairs.emplace_back(i, j);
                }
        }
        result.embedding = std::move(emb);
    } else if (search.exceeded) {
        result.status = SearchStatus::budget_exceeded;
    }
    return result;
}

}  // namespace

PatternSpec PatternSpec::family(int t, int s) {
    PatternSpec p;
    p.t = t;
    p.s = s;
    return p;
}

PatternSpec PatternSpec::explicit_graph(Graph h) {
    PatternSpec p;
    p.t = h.n();
    p.pattern = std::move(h);
    return p;
}

long PatternSpec::min_edges() const {
    if (is_family()) return static_cast<long>(t) * (t - 1) / 2 - s;
    return pattern->edge_count();
}

Graph k_minus(int t) { return delete_edge(complete(t), 0, 1); }

Graph k_equal(int t) {
    if (t < 4) throw std::invalid_argument("k_equal needs t >= 4");
    Graph g = complete(t);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    return g;
}

Graph k_less(int t) {
    if (t < 3) throw std::invalid_argument("k_less needs t >= 3");
    Graph g = complete(t);
    g.remove_edge(0, 1);
    g.remove_edge(0, 2);
    return g;
}

MinorResult find_minor(const Graph& g, const PatternSpec& pattern,
                       std::uint64_t node_budget) {
    std::vector<int> roots;
    if (!pattern.is_family()) roots.assign(pattern.size(), -1);
    return run_search(g, pattern, roots, node_budget);
}

MinorResult find_rooted_minor(const Graph& g, const Graph& pattern,
                              const std::vector<int>& roots,
                              std::uint64_t node_budget) {
    if (static_cast<int>(roots.size()) != pattern.n())
        throw std::invalid_argument("roots must map every pattern vertex");
    std::vector<char> seen(g.n(), 0);
    for (int r : roots) {
        if (r < 0) continue;
        if (r >= g.n()) throw std::out_of_range("root vertex out of range");
        if (seen[r]) throw std::invalid_argument("roots must be injective");
        seen[r] = 1;
    }
    return run_search(g, PatternSpec::explicit_graph(pattern), roots, node_budget);
}

bool verify_embedding(const Graph& g, const PatternSpec& pattern,
                      const MinorEmbedding& emb) {
    if (g.n() > 64) return false;
    int t = pattern.size();
    if (static_cast<int>(emb.branch_sets.size()) != t) return false;
    auto adj = adjacency64(g);
    std::vector<uint64_t> masks(t, 0);
    uint64_t used = 0;
    for (int i = 0; i < t; ++i) {
        if (emb.branch_sets[i].empty()) return false;
        for (int v : emb.branch_sets[i]) {
            if (v < 0 || v >= g.n()) return false;
            if ((used >> v) & 1) return false;  // overlap or duplicate
            used |= bit(v);
            masks[i] |= bit(v);
        }
        // connectivity of the induced branch set
        uint64_t comp = masks[i] & (~masks[i] + 1);
        for (;;) {
            uint64_t grown = comp;
            for (uint64_t m = comp; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                grown |= adj[v] & masks[i];
            }
            if (grown == comp) break;
            comp = grown;
        }
        if (comp != masks[i]) return false;
    }
    auto connected = [&](int i, int j) {
        for (int v : emb.branch_sets[i])
            if (adj[v] & masks[j]) return true;
        return false;
    };
    if (pattern.is_family()) {
        std::vector<std::pair<int, int>> missing;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                if (!connected(i, j)) missing.emplace_back(i, j);
        if (static_cast<int>(missing.size()) > pattern.s) return false;
        auto claimed = emb.missing_pairs;
        for (auto& [a, b] : claimed)
            if (a > b) std::swap(a, b);
        std::sort(claimed.begin(), claimed.end());
        return claimed == missing;
    }
    for (auto [u, v] : pattern.pattern->edges())
        if (!connected(u, v)) return false;
    return true;
}

}  // namespace minorforge
