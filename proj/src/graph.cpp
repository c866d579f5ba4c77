#include "minorforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minorforge {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
    if (n < 0 || n > kMaxVertices)
        throw std::out_of_range("vertex count out of range: " + std::to_string(n));
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    for (auto [u, v] : edge_list) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    mrow(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    mrow(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    mrow(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    mrow(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

std::uint64_t Graph::row64(int v) const {
    check_vertex(v);
    return row(v)[0];
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
}

long Graph::edge_count() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

DegreeStats Graph::degree_stats() const {
    DegreeStats s;
    s.degree_histogram.assign(n_ == 0 ? 1 : n_, 0);
    s.min_degree = n_;
    long total = 0;
    for (int v = 0; v < n_; ++v) {
        int d = degree(v);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        s.degree_histogram[d] += 1;
        total += d;
    }
    if (n_ == 0) s.min_degree = 0;
    s.edge_count = total / 2;
    return s;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((row(u)[v >> 6] >> (v & 63)) & 1) out.emplace_back(u, v);
    return out;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    Graph g(n);
    std::vector<int> part_of(n);
    int idx = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        if (part_sizes[p] <= 0) throw std::out_of_range("part sizes must be positive");
        for (int i = 0; i < part_sizes[p]; ++i) part_of[idx++] = static_cast<int>(p);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::out_of_range("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

Graph complement(const Graph& g) {
    int n = g.n();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& a,
                      std::vector<int>* old_to_new) {
    int n = g.n();
    std::vector<char> dead(n, 0);
    for (int v : a) {
        if (v < 0 || v >= n)
            throw std::out_of_range("vertex index out of range: " + std::to_string(v));
        dead[v] = 1;
    }
    std::vector<int> map(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!dead[v]) map[v] = m++;
    Graph out(m);
    for (int u = 0; u < n; ++u) {
        if (dead[u]) continue;
        for (int v = u + 1; v < n; ++v)
            if (!dead[v] && g.has_edge(u, v)) out.add_edge(map[u], map[v]);
    }
    if (old_to_new) *old_to_new = std::move(map);
    return out;
}

Graph delete_vertex(const Graph& g, int v) { return delete_vertices(g, {v}); }

Graph delete_edge(const Graph& g, int u, int v) {
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph add_edges(const Graph& g, const std::vector<std::pair<int, int>>& m) {
    Graph out = g;
    for (auto [u, v] : m) out.add_edge(u, v);
    return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: uv is not an edge");
    int keep = std::min(u, v);
    int drop = std::max(u, v);
    Graph merged = g;
    for (int w = 0; w < g.n(); ++w)
        if (w != keep && w != drop && g.has_edge(drop, w)) merged.add_edge(keep, w);
    return delete_vertex(merged, drop);
}

Graph contract_set(const Graph& g, const std::vector<int>& a,
                   std::vector<int>* old_to_new) {
    if (a.empty()) throw std::invalid_argument("contract_set: empty set");
    int keep = *std::min_element(a.begin(), a.end());
    Graph merged = g;
    std::vector<int> drop;
    for (int v : a) {
        if (v == keep) continue;
        drop.push_back(v);
        for (int w = 0; w < g.n(); ++w)
            if (w != keep && g.has_edge(v, w)) merged.add_edge(keep, w);
    }
    std::vector<int> dropped_map;
    Graph out = delete_vertices(merged, drop, &dropped_map);
    if (old_to_new) {
        for (int v : a) dropped_map[v] = dropped_map[keep];
        *old_to_new = std::move(dropped_map);
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    int m = static_cast<int>(verts.size());
    Graph out(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(verts[i], verts[j])) out.add_edge(i, j);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.n() + b.n());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
    return out;
}

Graph add_apex(const Graph& g) {
    Graph out(g.n() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < g.n(); ++v) out.add_edge(v, g.n());
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.n();
    if (n <= 1) return true;
    int w = g.words();
    std::vector<std::uint64_t> seen(w, 0), frontier(w, 0);
    seen[0] = frontier[0] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> next(w, 0);
        for (int v = 0; v < n; ++v) {
            if (!((frontier[v >> 6] >> (v & 63)) & 1)) continue;
            const std::uint64_t* r = g.row(v);
            for (int k = 0; k < w; ++k) next[k] |= r[k] & ~seen[k];
        }
        for (int k = 0; k < w; ++k)
            if (next[k]) {
                seen[k] |= next[k];
                grew = true;
            }
        frontier = std::move(next);
    }
    int count = 0;
    for (int k = 0; k < w; ++k) count += std::popcount(seen[k]);
    return count == n;
}

std::vector<std::uint64_t> adjacency64(const Graph& g) {
    if (g.n() > 64)
        throw std::out_of_range("operation requires at most 64 vertices, got " +
                                std::to_string(g.n()));
    std::vector<std::uint64_t> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = g.row(v)[0];
    return adj;
}

}  // namespace minorforge
