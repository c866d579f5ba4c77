#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "minorforge/enumerate.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"
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

// contract every branch set of a family embedding and count edges among the
// resulting t vertices
int contracted_edges(const Graph& g, const MinorEmbedding& emb) {
    int t = static_cast<int>(emb.branch_sets.size());
    int edges = 0;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            bool joined = false;
            for (int u : emb.branch_sets[i])
                for (int v : emb.branch_sets[j])
                    if (g.has_edge(u, v)) joined = true;
            if (joined) ++edges;
        }
    return edges;
}

}  // namespace

TEST_CASE("named deficient-clique patterns") {
    CHECK(k_minus(8).edge_count() == 27);
    CHECK(k_equal(6).edge_count() == 13);
    CHECK(k_less(6).edge_count() == 13);
    CHECK_FALSE(oracles::isomorphic(k_equal(6), k_less(6)));
    CHECK(PatternSpec::family(8, 4).min_edges() == 24);
    CHECK(PatternSpec::explicit_graph(petersen()).min_edges() == 15);
}

TEST_CASE("K8 has the (8,4) family minor with singleton branch sets") {
    MinorResult r = find_minor(complete(8), PatternSpec::family(8, 4));
    REQUIRE(r.found());
    CHECK(r.embedding->branch_sets.size() == 8);
    for (const auto& bs : r.embedding->branch_sets) CHECK(bs.size() == 1);
    CHECK(r.embedding->missing_pairs.empty());
    CHECK(verify_embedding(complete(8), PatternSpec::family(8, 4), *r.embedding));
}

TEST_CASE("K_{2,2,2,2} has no (8,3) family minor") {
    MinorResult r = find_minor(complete_multipartite({2, 2, 2, 2}),
                               PatternSpec::family(8, 3));
    CHECK(r.status == SearchStatus::no_minor);
}

TEST_CASE("Petersen has a K5 minor but no K6 minor") {
    MinorResult k6 = find_minor(petersen(), PatternSpec::explicit_graph(complete(6)));
    CHECK(k6.status == SearchStatus::no_minor);
    MinorResult k5 = find_minor(petersen(), PatternSpec::explicit_graph(complete(5)));
    REQUIRE(k5.found());
    CHECK(verify_embedding(petersen(), PatternSpec::explicit_graph(complete(5)),
                           *k5.embedding));
    // independent confirmation by delete/contract recursion
    CHECK(oracles::has_explicit_minor(petersen(), complete(5)));
    CHECK_FALSE(oracles::has_explicit_minor(petersen(), complete(6)));
}

TEST_CASE("every explicit pattern is a minor of itself") {
    for (int t = 3; t <= 8; ++t) {
        for (const Graph& p : {complete(t), k_minus(t), k_less(t)}) {
            MinorResult r = find_minor(p, PatternSpec::explicit_graph(p));
            CHECK(r.found());
        }
    }
}

TEST_CASE("family search agrees with the delete/contract oracle on small hosts") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 3);
        Graph g = random_graph(rng, n, 0.35 + 0.1 * (trial % 5));
        for (int t = 3; t <= 5; ++t)
            for (int s = 0; s <= 2; ++s) {
                MinorResult r = find_minor(g, PatternSpec::family(t, s));
                REQUIRE(r.status != SearchStatus::budget_exceeded);
                CHECK(r.found() == oracles::has_family_minor(g, t, s));
            }
    }
}

TEST_CASE("family search equals the member-by-member explicit search") {
    // exhaustive over all 6-vertex classes, every (t, s) with t <= 6, s <= 4
    std::vector<std::vector<Graph>> members_by_spec;
    for (int n = 4; n <= 6; ++n) {
        all_graphs(n, {}, [&](const Graph& g) {
            for (int t = 3; t <= 6; ++t)
                for (int s = 0; s <= 4 && s <= t * (t - 1) / 2; ++s) {
                    GraphFilter f;
                    f.exact_edges = t * (t - 1) / 2 - s;
                    bool any = false;
                    for (const Graph& m : all_graphs_list(t, f))
                        if (find_minor(g, PatternSpec::explicit_graph(m)).found())
                            any = true;
                    CHECK(find_minor(g, PatternSpec::family(t, s)).found() == any);
                }
        });
    }
}

TEST_CASE("monotonicity: adding an edge preserves any found minor") {
    std::mt19937_64 rng(13);
    int checked = 0;
    while (checked < 500) {
        int n = 7 + static_cast<int>(rng() % 5);
        Graph g = random_graph(rng, n, 0.45);
        int t = 4 + static_cast<int>(rng() % 3);
        int s = static_cast<int>(rng() % 4);
        if (!find_minor(g, PatternSpec::family(t, s)).found()) continue;
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        Graph h = add_edges(g, {{u, v}});
        CHECK(find_minor(h, PatternSpec::family(t, s)).found());
        ++checked;
    }
}

TEST_CASE("contraction coherence of family certificates") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 8 + static_cast<int>(rng() % 4);
        Graph g = random_graph(rng, n, 0.6);
        int t = 5 + static_cast<int>(rng() % 3);
        int s = static_cast<int>(rng() % 4);
        MinorResult r = find_minor(g, PatternSpec::family(t, s));
        if (!r.found()) continue;
        CHECK(verify_embedding(g, PatternSpec::family(t, s), *r.embedding));
        CHECK(contracted_edges(g, *r.embedding) >= t * (t - 1) / 2 - s);
    }
}

TEST_CASE("rooted search honors its roots") {
    MinorResult all_rooted =
        find_rooted_minor(complete(4), complete(4), {0, 1, 2, 3});
    REQUIRE(all_rooted.found());
    for (int i = 0; i < 4; ++i)
        CHECK(all_rooted.embedding->branch_sets[i] == std::vector<int>{i});

    // K3 rooted at three vertices of C4: the free vertex d must be absorbed
    Graph c4 = cycle(4);  // vertices a=0, b=1, c=2, d=3
    MinorResult r = find_rooted_minor(c4, complete(3), {0, 1, 2});
    REQUIRE(r.found());
    bool d_with_a = false;
    for (int i = 0; i < 3; ++i) {
        const auto& bs = r.embedding->branch_sets[i];
        CHECK(std::find(bs.begin(), bs.end(), i) != bs.end());
        if (std::find(bs.begin(), bs.end(), 3) != bs.end()) d_with_a = (i == 0 || i == 2);
    }
    CHECK(d_with_a);  // d is adjacent only to a and c
}

TEST_CASE("rooted K4 through two linked path pairs") {
    // z1..z4 = 0..3; internally disjoint length-3 paths (z1,z3), (z1,z4),
    // (z2,z3), (z2,z4) plus the edges z1z2 and z3z4
    Graph g(12, {{0, 1},  {2, 3},            // z1z2, z3z4
                 {0, 4},  {4, 5},  {5, 2},   // z1-z3
                 {0, 6},  {6, 7},  {7, 3},   // z1-z4
                 {1, 8},  {8, 9},  {9, 2},   // z2-z3
                 {1, 10}, {10, 11}, {11, 3}});  // z2-z4
    MinorResult r = find_rooted_minor(g, complete(4), {0, 1, 2, 3});
    REQUIRE(r.found());
    for (int i = 0; i < 4; ++i) {
        const auto& bs = r.embedding->branch_sets[i];
        CHECK(std::find(bs.begin(), bs.end(), i) != bs.end());
    }
    CHECK(verify_embedding(g, PatternSpec::explicit_graph(complete(4)), *r.embedding));
}

TEST_CASE("budget exhaustion is distinct from a negative answer") {
    MinorResult r = find_minor(complete_multipartite({2, 2, 2, 2}),
                               PatternSpec::family(7, 0), 1);
    CHECK(r.status == SearchStatus::budget_exceeded);
    CHECK_FALSE(r.found());
}

TEST_CASE("verify_embedding rejects malformed certificates") {
    Graph g = complete(8);
    PatternSpec fam = PatternSpec::family(8, 4);
    MinorEmbedding singletons;
    for (int v = 0; v < 8; ++v) singletons.branch_sets.push_back({v});
    CHECK(verify_embedding(g, fam, singletons));

    MinorEmbedding overlapping = singletons;
    overlapping.branch_sets[1] = {0};
    CHECK_FALSE(verify_embedding(g, fam, overlapping));

    // disconnected branch set in a sparse host
    Graph c6 = cycle(6);
    MinorEmbedding bad;
    bad.branch_sets = {{0, 3}, {1}, {2}};
    CHECK_FALSE(verify_embedding(c6, PatternSpec::explicit_graph(complete(3)), bad));

    // too many missing pairs for the family budget
    Graph sparse(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    MinorEmbedding chain;
    for (int v = 0; v < 8; ++v) chain.branch_sets.push_back({v});
    CHECK_FALSE(verify_embedding(sparse, fam, chain));
}

TEST_CASE("every returned embedding verifies on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 6 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 0.3 + 0.06 * (trial % 10));
        PatternSpec spec = (trial % 2) ? PatternSpec::family(4 + trial % 4, trial % 3)
                                       : PatternSpec::explicit_graph(
                                             k_minus(4 + trial % 3));
        MinorResult r = find_minor(g, spec);
        if (r.found()) CHECK(verify_embedding(g, spec, *r.embedding));
    }
}
