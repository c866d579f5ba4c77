#include "minorforge/canonical.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace minorforge {

namespace {

using std::uint64_t;

// Maximizes the concatenation of row codes r_1..r_{n-1}, where r_k lists the
// adjacency of the vertex at position k to positions 0..k-1 (position 0 most
// significant). Only argmax rows are branched on; unplaced vertices whose
// neighborhoods agree outside themselves (twins) are interchangeable by a
// transposition automorphism, so one representative per twin class suffices.
struct CanonSearch {
    int n;
    const std::vector<uint64_t>& adj;
    std::vector<uint64_t> rows, best_rows;
    std::vector<int> order, best_order;
    bool have_best = false;

    explicit CanonSearch(const std::vector<uint64_t>& a)
        : n(static_cast<int>(a.size())), adj(a), rows(a.size()), order(a.size()) {}

    void run() {
        if (n == 0) {
            have_best = true;
            return;
        }
        dfs(0, 0);
    }

    uint64_t row_code(int v, int k) const {
        uint64_t code = 0;
        for (int j = 0; j < k; ++j)
            code |= ((adj[v] >> order[j]) & 1) << (k - 1 - j);
        return code;
    }

    // Invariant: whenever have_best is set, rows[0..k-1] equals the best
    // prefix, so comparing only position k against best_rows[k] is exact.
    void dfs(int k, uint64_t placed) {
        if (k == n) {
            if (!have_best) {
                best_rows = rows;
                best_order = order;
                have_best = true;
            }
            // otherwise the leaf ties the current best; first found is kept
            return;
        }
        uint64_t avail = (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1) & ~placed;
        uint64_t maxcode = 0;
        uint64_t cands = 0;
        for (uint64_t m = avail; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            uint64_t code = row_code(v, k);
            if (!cands || code > maxcode) {
                maxcode = code;
                cands = uint64_t{1} << v;
            } else if (code == maxcode) {
                cands |= uint64_t{1} << v;
            }
        }
        // collapse twin classes to their lowest-index member
        uint64_t reps = 0;
        for (uint64_t m = cands; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            bool twin = false;
            for (uint64_t r = reps; r && !twin;) {
                int u = std::countr_zero(r);
                r &= r - 1;
                uint64_t ignore = (uint64_t{1} << u) | (uint64_t{1} << v);
                twin = ((adj[u] ^ adj[v]) & ~ignore) == 0;
            }
            if (!twin) reps |= uint64_t{1} << v;
        }
        for (uint64_t m = reps; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (have_best) {
                if (maxcode < best_rows[k]) return;
                if (maxcode > best_rows[k]) have_best = false;  // strictly better
            }
            rows[k] = maxcode;
            order[k] = v;
            dfs(k + 1, placed | (uint64_t{1} << v));
        }
    }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
    auto adj = adjacency64(g);
    CanonSearch search(adj);
    search.run();
    return search.best_order;
}

std::string canonical_form(const Graph& g) {
    auto adj = adjacency64(g);
    CanonSearch search(adj);
    search.run();
    int n = g.n();
    std::string out;
    out.push_back(static_cast<char>(n >> 8));
    out.push_back(static_cast<char>(n & 255));
    int acc = 0, filled = 0;
    for (int k = 1; k < n; ++k) {
        for (int b = k - 1; b >= 0; --b) {
            acc = (acc << 1) | static_cast<int>((search.best_rows[k] >> b) & 1);
            if (++filled == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(acc << (8 - filled)));
    return out;
}

Graph canonical_relabel(const Graph& g) {
    auto order = canonical_order(g);
    std::vector<int> pos(g.n());
    for (int k = 0; k < g.n(); ++k) pos[order[k]] = k;
    Graph out(g.n());
    for (auto [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
    return out;
}

}  // namespace minorforge
