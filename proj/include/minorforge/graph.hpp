#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace minorforge {

inline constexpr int kMaxVertices = 4096;

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    long edge_count = 0;
    std::vector<long> degree_histogram;  // index d counts vertices of degree d
};

// Simple undirected graph stored as rows of adjacency bitsets.
// Immutable by convention after construction: all derived graphs are copies.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n() const { return n_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const;
    // Adding an existing edge or a loop (u == v) is a no-op; G+uv = G in
    // those cases.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    // Single-word adjacency row; only valid when n <= 64.
    std::uint64_t row64(int v) const;

    int degree(int v) const;
    long edge_count() const;
    int min_degree() const;
    int max_degree() const;
    DegreeStats degree_stats() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::uint64_t* mrow(int v) {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph complete(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

Graph complement(const Graph& g);
// Deletes the vertices in `a`; surviving vertices are compacted in index
// order. If old_to_new is given it receives a map of size g.n() with -1 for
// deleted vertices.
Graph delete_vertices(const Graph& g, const std::vector<int>& a,
                      std::vector<int>* old_to_new = nullptr);
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph add_edges(const Graph& g, const std::vector<std::pair<int, int>>& m);
// Contracts an existing edge uv; the merged vertex keeps the lower index,
// parallel edges collapse, and indices above the removed vertex shift down.
Graph contract_edge(const Graph& g, int u, int v);
// Identifies all vertices of `a` into one vertex (the lowest index of `a`),
// dropping loops and parallel edges; remaining indices compact as in
// delete_vertices.
Graph contract_set(const Graph& g, const std::vector<int>& a,
                   std::vector<int>* old_to_new = nullptr);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph disjoint_union(const Graph& a, const Graph& b);
// New vertex adjacent to every vertex of g, appended as index g.n().
Graph add_apex(const Graph& g);

bool is_connected(const Graph& g);

// Adjacency rows as plain 64-bit masks; requires n <= 64 (the engine fast
// path shared by all search code).
std::vector<std::uint64_t> adjacency64(const Graph& g);

}  // namespace minorforge
