#include "minorforge/cliques.hpp"

#include <bit>
#include <cstdint>

namespace minorforge {

namespace {

using std::uint64_t;

struct CliqueSearch {
    const std::vector<uint64_t>& adj;
    std::vector<int> current, best;

    void expand(uint64_t cands) {
        if (!cands) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (current.size() + static_cast<std::size_t>(std::popcount(cands)) <=
            best.size())
            return;
        // branch on vertices outside a pivot's neighborhood
        int pivot = -1, pivot_score = -1;
        for (uint64_t m = cands; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int score = std::popcount(cands & adj[v]);
            if (score > pivot_score) {
                pivot_score = score;
                pivot = v;
            }
        }
        uint64_t branch = cands & ~adj[pivot];
        for (uint64_t m = branch; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            current.push_back(v);
            expand(cands & adj[v]);
            current.pop_back();
            cands &= ~(uint64_t{1} << v);
            if (current.size() + static_cast<std::size_t>(std::popcount(cands)) <=
                best.size())
                return;
        }
    }
};

}  // namespace

std::vector<int> max_clique(const Graph& g) {
    auto adj = adjacency64(g);
    if (g.n() == 0) return {};
    uint64_t all = g.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n()) - 1;
    CliqueSearch search{adj, {}, {}};
    search.expand(all);
    return search.best;
}

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

std::vector<std::vector<int>> find_k_cliques(const Graph& g, int k) {
    auto adj = adjacency64(g);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    uint64_t all = g.n() == 0 ? 0
                   : g.n() == 64 ? ~uint64_t{0}
                                 : (uint64_t{1} << g.n()) - 1;
    auto rec = [&](auto&& self, uint64_t cands) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            out.push_back(chosen);
            return;
        }
        if (std::popcount(cands) < k - static_cast<int>(chosen.size())) return;
        for (uint64_t m = cands; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            chosen.push_back(v);
            // only extend upward to emit each clique once
            uint64_t above = v == 63 ? 0 : ~((uint64_t{2} << v) - 1);
            self(self, cands & adj[v] & above);
            chosen.pop_back();
        }
    };
    if (k >= 0) rec(rec, all);
    return out;
}

}  // namespace minorforge
