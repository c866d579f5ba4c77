#include "minorforge/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "minorforge/canonical.hpp"
#include "minorforge/cliques.hpp"
#include "minorforge/connectivity.hpp"
#include "minorforge/subgraph.hpp"

namespace minorforge {

namespace {

int connectivity_or_zero(const Graph& g) {
    if (g.n() < 2) return 0;
    return vertex_connectivity(g);
}

long max_future_edges(int cur_n, int final_n) {
    long total = 0;
    for (int j = cur_n; j < final_n; ++j) total += j;
    return total;
}

struct Generator {
    int n;
    const GraphFilter& filter;
    std::vector<Graph> out;

    bool hereditary_ok(const Graph& g) const {
        if (filter.max_degree && g.max_degree() > *filter.max_degree) return false;
        if (filter.exact_edges) {
            long e = g.edge_count();
            if (e > *filter.exact_edges) return false;
            if (e + max_future_edges(g.n(), n) < *filter.exact_edges) return false;
        }
        if (filter.alpha_at_most && independence_number(g) > *filter.alpha_at_most)
            return false;
        for (const Graph& f : filter.forbidden_subgraphs)
            if (f.n() <= g.n() && subgraph_embed(f, g)) return false;
        return true;
    }

    void expand(const Graph& parent, const std::string& parent_canon) {
        int k = parent.n();
        std::unordered_set<std::string> seen_children;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            Graph child(k + 1);
            for (auto [u, v] : parent.edges()) child.add_edge(u, v);
            for (int v = 0; v < k; ++v)
                if ((mask >> v) & 1) child.add_edge(v, k);
            if (!hereditary_ok(child)) continue;

            // canonical-deletion test: deleting the vertex at the last
            // canonical position must recover the parent's class
            auto order = canonical_order(child);
            int w = order[k];
            if (canonical_form(delete_vertex(child, w)) != parent_canon) continue;

            std::string child_canon = canonical_form(child);
            if (!seen_children.insert(child_canon).second) continue;

            if (k + 1 == n)
                out.push_back(child);
            else
                expand(child, child_canon);
        }
    }
};

}  // namespace

bool GraphFilter::passes(const Graph& g) const {
    if (min_degree && g.min_degree() < *min_degree) return false;
    if (max_degree && g.max_degree() > *max_degree) return false;
    if (exact_edges && g.edge_count() != *exact_edges) return false;
    if (alpha_at_most && independence_number(g) > *alpha_at_most) return false;
    if (min_connectivity && connectivity_or_zero(g) < *min_connectivity) return false;
    for (const Graph& f : forbidden_subgraphs)
        if (f.n() <= g.n() && subgraph_embed(f, g)) return false;
    return true;
}

void all_graphs(int n, const GraphFilter& filter,
                const std::function<void(const Graph&)>& sink) {
    if (n < 1 || n > 10)
        throw std::out_of_range("all_graphs supports 1 <= n <= 10, got " +
                                std::to_string(n));
    Generator gen{n, filter, {}};
    Graph k1(1);
    if (n == 1) {
        if (filter.passes(k1)) sink(k1);
        return;
    }
    if (gen.hereditary_ok(k1)) gen.expand(k1, canonical_form(k1));

    std::vector<std::pair<std::string, Graph>> keyed;
    keyed.reserve(gen.out.size());
    for (Graph& g : gen.out)
        if (filter.passes(g)) keyed.emplace_back(canonical_form(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, g] : keyed) sink(g);
}

std::vector<Graph> all_graphs_list(int n, const GraphFilter& filter) {
    std::vector<Graph> out;
    all_graphs(n, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::uint64_t count_graphs(int n, const GraphFilter& filter) {
    std::uint64_t count = 0;
    all_graphs(n, filter, [&](const Graph&) { ++count; });
    return count;
}

}  // namespace minorforge
