#include "minorforge/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace minorforge {

namespace {

using std::uint64_t;

struct EmbedSearch {
    int nh, ng;
    std::vector<uint64_t> hadj, gadj;
    std::vector<int> hdeg, gdeg;
    std::vector<int> order;  // pattern vertices, most-constrained first
    std::vector<int> assign;
    uint64_t used = 0;

    bool dfs(std::size_t k) {
        if (k == order.size()) return true;
        int hv = order[k];
        for (int gv = 0; gv < ng; ++gv) {
            if ((used >> gv) & 1) continue;
            if (gdeg[gv] < hdeg[hv]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                if ((hadj[hv] >> order[j]) & 1)
                    ok = (gadj[gv] >> assign[order[j]]) & 1;
            if (!ok) continue;
            assign[hv] = gv;
            used |= uint64_t{1} << gv;
            if (dfs(k + 1)) return true;
            used &= ~(uint64_t{1} << gv);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> subgraph_embed(const Graph& h, const Graph& g) {
    if (h.n() > g.n()) return std::nullopt;
    EmbedSearch s;
    s.nh = h.n();
    s.ng = g.n();
    s.hadj = adjacency64(h);
    s.gadj = adjacency64(g);
    s.hdeg.resize(s.nh);
    s.gdeg.resize(s.ng);
    for (int v = 0; v < s.nh; ++v) s.hdeg[v] = std::popcount(s.hadj[v]);
    for (int v = 0; v < s.ng; ++v) s.gdeg[v] = std::popcount(s.gadj[v]);

    // order: repeatedly take the vertex with most already-ordered neighbors,
    // ties by degree then index, so partial assignments are checked early
    std::vector<char> placed(s.nh, 0);
    for (int k = 0; k < s.nh; ++k) {
        int pick = -1, pick_conn = -1, pick_deg = -1;
        for (int v = 0; v < s.nh; ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u : s.order)
                if ((s.hadj[v] >> u) & 1) ++conn;
            if (conn > pick_conn || (conn == pick_conn && s.hdeg[v] > pick_deg)) {
                pick = v;
                pick_conn = conn;
                pick_deg = s.hdeg[v];
            }
        }
        s.order.push_back(pick);
        placed[pick] = 1;
    }
    s.assign.assign(s.nh, -1);
    if (!s.dfs(0)) return std::nullopt;
    return s.assign;
}

}  // namespace minorforge
