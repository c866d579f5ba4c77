#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "minorforge/canonical.hpp"
#include "minorforge/cliques.hpp"
#include "minorforge/connectivity.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/graph6.hpp"
#include "minorforge/subgraph.hpp"
#include "oracles.hpp"

using namespace minorforge;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("builders produce the expected vertex and edge counts") {
    Graph k2222 = complete_multipartite({2, 2, 2, 2});
    CHECK(k2222.n() == 8);
    CHECK(k2222.edge_count() == 24);
    CHECK(complement(complete(5)).edge_count() == 0);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(path(4).edge_count() == 3);
    CHECK(petersen().n() == 10);
    CHECK(petersen().edge_count() == 15);

    // adding the four missing pairs of K_{2,2,2,2} gives K8
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (!k2222.has_edge(u, v)) missing.emplace_back(u, v);
    CHECK(missing.size() == 4);
    CHECK(add_edges(k2222, missing) == complete(8));

    // adding an existing edge or a loop is a no-op
    CHECK(add_edges(complete(4), {{0, 1}}) == complete(4));
    CHECK(add_edges(complete(4), {{2, 2}}) == complete(4));
}

TEST_CASE("degree stats are consistent") {
    Graph g = petersen();
    DegreeStats stats = g.degree_stats();
    CHECK(stats.min_degree == 3);
    CHECK(stats.max_degree == 3);
    CHECK(stats.edge_count == 15);
    long total = 0, weighted = 0;
    for (std::size_t d = 0; d < stats.degree_histogram.size(); ++d) {
        total += stats.degree_histogram[d];
        weighted += static_cast<long>(d) * stats.degree_histogram[d];
    }
    CHECK(total == g.n());
    CHECK(weighted == 2 * stats.edge_count);
}

TEST_CASE("contract_edge merges into the lower index and stays simple") {
    CHECK(oracles::isomorphic(contract_edge(cycle(4), 0, 1), complete(3)));
    CHECK(contract_edge(complete(5), 1, 3) == complete(4));
    CHECK_THROWS_AS(contract_edge(cycle(4), 0, 2), std::invalid_argument);

    // Petersen is triangle-free, so contracting any edge loses exactly one
    // edge: 15 - 1 - |N(u) ^ N(v)| = 14.
    Graph p = petersen();
    for (auto [u, v] : p.edges()) {
        Graph c = contract_edge(p, u, v);
        CHECK(c.n() == 9);
        CHECK(c.edge_count() == 14);
    }
}

TEST_CASE("edge count identity e(G/uv) = e(G) - 1 - |N(u) ^ N(v)|") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 9, 0.5);
        for (auto [u, v] : g.edges()) {
            int common = std::popcount(g.row64(u) & g.row64(v));
            CHECK(contract_edge(g, u, v).edge_count() == g.edge_count() - 1 - common);
        }
    }
}

TEST_CASE("contract_set identifies a set into its lowest index") {
    // contracting one part of K_{2,2,2,2} onto itself is not allowed (the
    // set need not induce an edge), but identification still works
    Graph g = cycle(6);
    Graph c = contract_set(g, {0, 3});
    CHECK(c.n() == 5);
    CHECK(c.degree(0) == 4);
}

TEST_CASE("delete_vertices compacts and maps indices") {
    std::vector<int> old_to_new;
    Graph g = delete_vertices(cycle(5), {1, 3}, &old_to_new);
    CHECK(g.n() == 3);
    CHECK(old_to_new == std::vector<int>{0, -1, 1, -1, 2});
    CHECK(g.has_edge(0, 2));  // the old edge 0-4
}

TEST_CASE("clique and independence numbers") {
    Graph k2222 = complete_multipartite({2, 2, 2, 2});
    CHECK(independence_number(k2222) == 2);
    CHECK(clique_number(cycle(5)) == 2);
    CHECK(clique_number(k2222) == 4);
    CHECK(find_k_cliques(k2222, 4).size() == 16);  // one vertex per part
    CHECK(find_k_cliques(petersen(), 3).empty());
}

TEST_CASE("alpha equals the clique number of the complement on all graphs up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
        all_graphs(n, {}, [&](const Graph& g) {
            CHECK(independence_number(g) == clique_number(complement(g)));
        });
}

TEST_CASE("vertex connectivity matches known values and the brute-force oracle") {
    CHECK(vertex_connectivity(complete(8)) == 7);
    CHECK(vertex_connectivity(complete_multipartite({2, 2, 2, 2})) == 6);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(vertex_connectivity(path(5)) == 1);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 8, 0.4 + 0.05 * (trial % 10));
        CHECK(vertex_connectivity(g) == oracles::brute_connectivity(g));
        CHECK(vertex_connectivity(g) <= g.min_degree());
    }
}

TEST_CASE("disjoint path counts respect Menger") {
    Graph p = petersen();
    for (int s = 0; s < p.n(); ++s)
        for (int t = s + 1; t < p.n(); ++t)
            if (!p.has_edge(s, t)) CHECK(disjoint_path_count(p, s, t) == 3);
}

TEST_CASE("subgraph embedding finds and rejects correctly") {
    CHECK(subgraph_embed(complete(4), complete(5)).has_value());
    CHECK_FALSE(subgraph_embed(complete(3), petersen()).has_value());
    auto phi = subgraph_embed(cycle(5), petersen());
    REQUIRE(phi.has_value());
    for (int i = 0; i < 5; ++i)
        CHECK(petersen().has_edge((*phi)[i], (*phi)[(i + 1) % 5]));
}

TEST_CASE("graph6 round trip on random graphs matches an independent encoder") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 60);
        Graph g = random_graph(rng, n, 0.3);
        std::string text = to_graph6(g);
        CHECK(text == oracles::encode_graph6(g));
        CHECK(from_graph6(text) == g);
    }
}

TEST_CASE("graph6 errors carry the byte offset") {
    CHECK_THROWS_AS(from_graph6(""), Graph6Error);
    try {
        from_graph6("G????");  // truncated payload for n=8
        FAIL("expected a parse error");
    } catch (const Graph6Error& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    try {
        from_graph6("C\x01");  // byte below the printable range
        FAIL("expected a parse error");
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(from_graph6("C??extra"), Graph6Error);
}

TEST_CASE("edge list text parsing") {
    Graph g = from_edge_list_text("# triangle\n0 1\n1 2\n\n2 0\n");
    CHECK(g == complete(3));
    Graph h = from_edge_list_text("5\n0 1\n");
    CHECK(h.n() == 5);
    CHECK(h.edge_count() == 1);
}

TEST_CASE("canonical form separates and identifies isomorphism classes") {
    Graph c5a = cycle(5);
    Graph c5b(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});  // relabeled C5
    CHECK(canonical_form(c5a) == canonical_form(c5b));
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_form(path(4)) != canonical_form(star));
    CHECK(canonical_relabel(c5b) == canonical_relabel(c5a));

    // canonical_order realizes canonical_form
    Graph g = petersen();
    std::vector<int> order = canonical_order(g);
    Graph relabeled(g.n());
    std::vector<int> pos(g.n());
    for (int k = 0; k < g.n(); ++k) pos[order[k]] = k;
    for (auto [u, v] : g.edges()) relabeled.add_edge(pos[u], pos[v]);
    CHECK(canonical_form(relabeled) == canonical_form(g));
}

TEST_CASE("canonical form partitions labeled graphs exactly as the permutation oracle") {
    for (int n = 2; n <= 6; ++n) {
        auto expected = oracles::labeled_class_counts(n);
        int pairs = n * (n - 1) / 2;
        std::map<int, std::set<std::string>> got;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g(n);
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if ((mask >> k) & 1) g.add_edge(u, v);
            got[std::popcount(mask)].insert(canonical_form(g));
        }
        long total = 0;
        for (auto& [edges, forms] : got) {
            CHECK(static_cast<long>(forms.size()) == expected[edges]);
            total += static_cast<long>(forms.size());
        }
        if (n == 5) CHECK(total == 34);
    }
}
