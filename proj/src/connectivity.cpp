#include "minorforge/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace minorforge {

namespace {

// Unit-capacity flow on the split digraph: node v_in = 2v, v_out = 2v+1,
// arc v_in -> v_out of capacity 1 (infinite for the terminals), and for each
// edge uv arcs u_out -> v_in and v_out -> u_in of effectively infinite
// capacity. One BFS augmentation adds one vertex-disjoint path.
struct FlowNet {
    int n;
    std::vector<std::vector<int>> cap;  // residual capacities, dense

    explicit FlowNet(const Graph& g) : n(g.n()), cap(2 * g.n(), std::vector<int>(2 * g.n(), 0)) {
        for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = 1;
        for (auto [u, v] : g.edges()) {
            cap[2 * u + 1][2 * v] = n;
            cap[2 * v + 1][2 * u] = n;
        }
    }

    int max_flow(int s, int t, int stop_at) {
        cap[2 * s][2 * s + 1] = n;
        cap[2 * t][2 * t + 1] = n;
        int source = 2 * s + 1, sink = 2 * t;
        int flow = 0;
        std::vector<int> prev(2 * n);
        while (flow < stop_at) {
            std::fill(prev.begin(), prev.end(), -1);
            prev[source] = source;
            std::queue<int> q;
            q.push(source);
            while (!q.empty() && prev[sink] < 0) {
                int x = q.front();
                q.pop();
                for (int y = 0; y < 2 * n; ++y)
                    if (prev[y] < 0 && cap[x][y] > 0) {
                        prev[y] = x;
                        q.push(y);
                    }
            }
            if (prev[sink] < 0) break;
            for (int y = sink; y != source; y = prev[y]) {
                cap[prev[y]][y] -= 1;
                cap[y][prev[y]] += 1;
            }
            ++flow;
        }
        return flow;
    }
};

}  // namespace

int disjoint_path_count(const Graph& g, int s, int t) {
    if (g.has_edge(s, t))
        throw std::invalid_argument("disjoint_path_count requires a nonadjacent pair");
    FlowNet net(g);
    return net.max_flow(s, t, g.n());
}

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n < 2) throw std::invalid_argument("vertex_connectivity requires n >= 2");
    if (n > 64) throw std::out_of_range("vertex_connectivity engine limit is 64");
    int best = n - 1;  // complete-graph convention; also an upper bound
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            FlowNet net(g);
            best = std::min(best, net.max_flow(s, t, best));
            if (best == 0) return 0;
        }
    return best;
}

}  // namespace minorforge
