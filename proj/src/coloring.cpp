#include "minorforge/coloring.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

#include "minorforge/cliques.hpp"
#include "minorforge/extremal.hpp"

namespace minorforge {

namespace {

using std::uint64_t;

uint64_t bit(int v) { return uint64_t{1} << v; }

}  // namespace

int Coloring::palette_size() const {
    std::vector<int> seen;
    for (int c : color)
        if (c >= 0 && std::find(seen.begin(), seen.end(), c) == seen.end())
            seen.push_back(c);
    return static_cast<int>(seen.size());
}

bool Coloring::proper(const Graph& g) const {
    if (static_cast<int>(color.size()) != g.n()) return false;
    for (auto [u, v] : g.edges())
        if (color[u] < 0 || color[u] == color[v]) return false;
    for (int c : color)
        if (c < 0) return false;
    return true;
}

namespace {

// k-colorability decision: a maximum clique is precolored, then vertices are
// picked by saturation (most distinctly colored neighbors) and offered only
// colors up to one past the highest used so far.
struct ColorSearch {
    int n = 0, k = 0;
    std::vector<uint64_t> adj;
    std::vector<int> color;
    uint64_t budget = 0;
    uint64_t* nodes = nullptr;
    bool exceeded = false;

    uint64_t neighbor_colors(int v) const {
        uint64_t m = 0;
        for (uint64_t nb = adj[v]; nb;) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[w] >= 0) m |= bit(color[w]);
        }
        return m;
    }

    bool dfs(int colored, int max_used) {
        if (++*nodes > budget) {
            exceeded = true;
            return false;
        }
        if (colored == n) return true;
        int pick = -1, pick_sat = -1;
        uint64_t pick_mask = 0;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            uint64_t m = neighbor_colors(v);
            int sat = std::popcount(m);
            if (sat > pick_sat ||
                (sat == pick_sat && std::popcount(adj[v]) > std::popcount(adj[pick]))) {
                pick = v;
                pick_sat = sat;
                pick_mask = m;
            }
        }
        if (pick_sat >= k) return false;
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if ((pick_mask >> c) & 1) continue;
            color[pick] = c;
            if (dfs(colored + 1, std::max(max_used, c))) return true;
            color[pick] = -1;
            if (exceeded) return false;
        }
        return false;
    }
};

}  // namespace

ChromaticResult exact_chromatic(const Graph& g, std::uint64_t node_budget) {
    if (g.n() > 20)
        throw std::invalid_argument("exact_chromatic supports n <= 20");
    ChromaticResult res;
    if (g.n() == 0) {
        res.chi = 0;
        return res;
    }
    std::vector<int> clique = max_clique(g);
    res.lower = static_cast<int>(clique.size());
    res.coloring = greedy_degeneracy_coloring(g);
    res.upper = res.coloring.palette_size();
    if (res.lower == res.upper) {
        res.chi = res.upper;
        return res;
    }

    auto adj = adjacency64(g);
    for (int k = res.lower; k < res.upper; ++k) {
        ColorSearch search;
        search.n = g.n();
        search.k = k;
        search.adj = adj;
        search.color.assign(g.n(), -1);
        search.budget = node_budget;
        search.nodes = &res.nodes;
        for (std::size_t i = 0; i < clique.size(); ++i)
            search.color[clique[i]] = static_cast<int>(i);
        bool ok = search.dfs(static_cast<int>(clique.size()),
                             static_cast<int>(clique.size()) - 1);
        if (search.exceeded) return res;  // bounds only
        if (ok) {
            res.upper = k;
            res.coloring.color = search.color;
            break;
        }
        res.lower = k + 1;
    }
    res.chi = res.upper;
    return res;
}

Coloring greedy_degeneracy_coloring(const Graph& g) {
    auto [k, order] = degeneracy(g);
    (void)k;
    Coloring col;
    col.color.assign(g.n(), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        uint64_t used = 0;
        for (int w = 0; w < g.n(); ++w)
            if (col.color[w] >= 0 && g.has_edge(v, w)) used |= bit(col.color[w]);
        col.color[v] = std::countr_one(used);
    }
    return col;
}

namespace {

std::vector<int> two_colored_component(const Graph& g, const std::vector<int>& color,
                                       int start, int c1, int c2,
                                       std::vector<int>* parent_out) {
    std::vector<int> parent(g.n(), -2);
    std::queue<int> q;
    parent[start] = -1;
    q.push(start);
    std::vector<int> comp;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        comp.push_back(v);
        for (int w = 0; w < g.n(); ++w)
            if (parent[w] == -2 && g.has_edge(v, w) &&
                (color[w] == c1 || color[w] == c2)) {
                parent[w] = v;
                q.push(w);
            }
    }
    if (parent_out) *parent_out = std::move(parent);
    return comp;
}

}  // namespace

KempeOutcome kempe_paths(const KempeInstance& inst) {
    const Graph& g = inst.g;
    int n = g.n();
    if (inst.x < 0 || inst.x >= n) throw std::invalid_argument("apex out of range");
    std::vector<char> in_s(n, 0);
    for (int v : inst.s) {
        if (v < 0 || v >= n || v == inst.x || !g.has_edge(inst.x, v))
            throw std::invalid_argument("S must be a subset of N(x)");
        if (in_s[v]) throw std::invalid_argument("S has a repeated vertex");
        in_s[v] = 1;
    }
    for (int u : inst.s)
        for (int v : inst.s)
            if (u < v && g.has_edge(u, v))
                throw std::invalid_argument("S is not independent");
    for (auto [u, v] : inst.m) {
        bool ok = u >= 0 && v >= 0 && u < n && v < n && u != v && !in_s[u] &&
                  !in_s[v] && u != inst.x && v != inst.x &&
                  g.has_edge(inst.x, u) && g.has_edge(inst.x, v) && !g.has_edge(u, v);
        if (!ok)
            throw std::invalid_argument("M pairs must be missing edges of G[N(x) \\ S]");
    }

    std::vector<int> merge = inst.s;
    merge.push_back(inst.x);
    std::vector<int> map;
    Graph contracted = contract_set(g, merge, &map);
    const Coloring& cc = inst.contraction_coloring;
    if (!cc.proper(contracted))
        throw std::invalid_argument("contraction coloring is not proper");
    if (cc.color[map[inst.x]] != 0)
        throw std::invalid_argument("merged vertex must have color 0");
    for (int c : cc.color)
        if (c >= 64) throw std::invalid_argument("colors must be below 64");

    // lift to G: S joins the merged color class, x stays open
    Coloring lifted;
    lifted.color.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (v != inst.x) lifted.color[v] = in_s[v] ? 0 : cc.color[map[v]];

    uint64_t palette = 0;
    for (int c : cc.color) palette |= bit(c);
    uint64_t on_ring = 0;  // colors on N(x) \ S
    std::vector<int> ring_color_count(64, 0);
    for (int v = 0; v < n; ++v)
        if (v != inst.x && !in_s[v] && g.has_edge(inst.x, v)) {
            on_ring |= bit(lifted.color[v]);
            ++ring_color_count[lifted.color[v]];
        }

    uint64_t absent = palette & ~on_ring & ~bit(0);
    if (absent) {
        ExtensionFound ext{lifted};
        ext.coloring.color[inst.x] = std::countr_zero(absent);
        if (!ext.coloring.proper(g))
            throw std::logic_error("extension branch produced an improper coloring");
        return ext;
    }

    PathSet out;
    for (auto [u, v] : inst.m) {
        int cu = lifted.color[u], cv = lifted.color[v];
        // the walk argument needs the end colors to pin down the ends:
        // each must occur exactly once on N(x) \ S, so the two-colored
        // subgraph meets N[x] in {u, v} only
        if (ring_color_count[cu] != 1 || ring_color_count[cv] != 1)
            throw std::invalid_argument("end colors repeat on N(x) \\ S");
        std::vector<int> parent;
        std::vector<int> comp = two_colored_component(g, lifted.color, u, cu, cv, &parent);
        if (parent[v] == -2) {
            // different components: swap u's component, then cu is free for x
            ExtensionFound ext{lifted};
            for (int w : comp)
                ext.coloring.color[w] = ext.coloring.color[w] == cu ? cv : cu;
            ext.coloring.color[inst.x] = cu;
            if (!ext.coloring.proper(g))
                throw std::logic_error("swap branch produced an improper coloring");
            return ext;
        }
        KempePath p;
        p.u = u;
        p.v = v;
        for (int w = v; w != -1; w = parent[w]) p.vertices.push_back(w);
        std::reverse(p.vertices.begin(), p.vertices.end());
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
            int w = p.vertices[i];
            if (w == inst.x || g.has_edge(inst.x, w))
                throw std::logic_error("path interior touches N[x]");
        }
        out.paths.push_back(std::move(p));
    }

    // distinct ring colors make the two-colored subgraphs of end-disjoint
    // pairs vertex-disjoint; keep that as a hard invariant
    for (std::size_t i = 0; i < out.paths.size(); ++i)
        for (std::size_t j = i + 1; j < out.paths.size(); ++j) {
            const auto& a = out.paths[i];
            const auto& b = out.paths[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
            for (int w : a.vertices)
                for (int z : b.vertices)
                    if (w == z)
                        throw std::logic_error("end-disjoint paths share a vertex");
        }
    out.lifted = std::move(lifted);
    return out;
}

namespace {

// smallest-class elimination via two-colored component swaps; a swap is
// applied only when it strictly shrinks the smallest class
bool kempe_reduce_once(const Graph& g, Coloring& col) {
    int palette = 0;
    for (int c : col.color) palette = std::max(palette, c + 1);
    std::vector<int> count(palette, 0);
    for (int c : col.color) ++count[c];
    int small = 0;
    for (int c = 1; c < palette; ++c)
        if (count[c] < count[small]) small = c;

    for (int v = 0; v < g.n(); ++v) {
        if (col.color[v] != small) continue;
        for (int c2 = 0; c2 < palette; ++c2) {
            if (c2 == small) continue;
            auto comp = two_colored_component(g, col.color, v, small, c2, nullptr);
            int gain = 0;
            for (int w : comp) gain += col.color[w] == small ? 1 : -1;
            if (gain <= 0) continue;
            for (int w : comp) col.color[w] = col.color[w] == small ? c2 : small;
            return true;
        }
    }
    return false;
}

void compact_palette(Coloring& col) {
    std::vector<int> remap(col.color.size() + 1, -1);
    int next = 0;
    for (int& c : col.color) {
        if (remap[c] == -1) remap[c] = next++;
        c = remap[c];
    }
}

}  // namespace

SevenColorOutcome seven_color_or_minor(const Graph& g, std::uint64_t node_budget) {
    SevenColorOutcome out;
    if (g.n() <= 16) {
        ChromaticResult chrom = exact_chromatic(g);
        if (!chrom.exact()) {
            out.unresolved = true;
            return out;
        }
        if (*chrom.chi <= 7) {
            out.coloring = chrom.coloring;
            return out;
        }
        MinorResult r = find_minor(g, PatternSpec::family(8, 4), node_budget);
        if (r.found() && verify_embedding(g, PatternSpec::family(8, 4), *r.embedding))
            out.minor = std::move(r.embedding);
        else if (r.status == SearchStatus::budget_exceeded)
            out.unresolved = true;
        else
            out.theorem_falsified = true;
        return out;
    }

    Coloring col = greedy_degeneracy_coloring(g);
    while (col.palette_size() > 7 && kempe_reduce_once(g, col)) compact_palette(col);
    compact_palette(col);
    if (col.palette_size() <= 7) {
        out.coloring = std::move(col);
        return out;
    }
    MinorResult r = find_minor(g, PatternSpec::family(8, 4), node_budget);
    if (r.found() && verify_embedding(g, PatternSpec::family(8, 4), *r.embedding))
        out.minor = std::move(r.embedding);
    else
        out.unresolved = true;  // a failed heuristic coloring proves nothing
    return out;
}

}  // namespace minorforge
