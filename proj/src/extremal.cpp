#include "minorforge/extremal.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "minorforge/connectivity.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/graph6.hpp"

namespace minorforge {

namespace {

using std::uint64_t;

uint64_t bit(int v) { return uint64_t{1} << v; }

bool is_4clique(const Graph& g, const std::array<int, 4>& vs) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

int extremal_edge_target(int n) { return (9 * n - 24 + (n & 1)) / 2; }

std::mt19937_64 trial_rng(uint64_t seed, uint64_t n, uint64_t trial) {
    std::seed_seq seq{seed, n, trial};
    return std::mt19937_64(seq);
}

}  // namespace

CockadeRecipe CockadeRecipe::chain(int copies) {
    CockadeRecipe r;
    r.copies = copies;
    std::array<int, 4> target = {0, 2, 4, 6};
    for (int i = 1; i < copies; ++i) {
        // vertices 1,3,5,7 of the glued copy land at the end of the host,
        // in order, and form the next target clique
        r.schedule.push_back({target, {0, 2, 4, 6}});
        int base = 8 + 4 * (i - 1);
        target = {base, base + 1, base + 2, base + 3};
    }
    return r;
}

Graph build_cockade(const CockadeRecipe& recipe) {
    if (recipe.copies < 1)
        throw std::invalid_argument("cockade needs at least one copy");
    if (static_cast<int>(recipe.schedule.size()) != recipe.copies - 1)
        throw std::invalid_argument("schedule must have one step per copy after the first");
    const Graph block = complete_multipartite({2, 2, 2, 2});
    Graph g = block;
    for (const GlueStep& step : recipe.schedule) {
        for (int i = 0; i < 4; ++i) {
            if (step.target[i] < 0 || step.target[i] >= g.n())
                throw std::invalid_argument("glue target out of range");
            if (step.fresh[i] < 0 || step.fresh[i] >= 8)
                throw std::invalid_argument("glue fresh vertex out of range");
        }
        if (!is_4clique(g, step.target))
            throw std::invalid_argument("glue target is not a 4-clique");
        if (!is_4clique(block, step.fresh))
            throw std::invalid_argument("glue fresh set is not a 4-clique");
        std::vector<int> map(8, -1);
        for (int i = 0; i < 4; ++i) {
            if (map[step.fresh[i]] != -1 ||
                std::count(step.target.begin(), step.target.end(), step.target[i]) != 1)
                throw std::invalid_argument("glue vertices must be distinct");
            map[step.fresh[i]] = step.target[i];
        }
        int base = g.n();
        Graph grown(base + 4);
        for (auto [u, v] : g.edges()) grown.add_edge(u, v);
        int next = base;
        for (int v = 0; v < 8; ++v)
            if (map[v] == -1) map[v] = next++;
        for (auto [u, v] : block.edges()) grown.add_edge(map[u], map[v]);
        g = std::move(grown);
    }
    if (2 * g.edge_count() != 9L * g.n() - 24)
        throw std::logic_error("cockade edge count violates 2e = 9n - 24");
    return g;
}

VerificationReport verify_cockade_tightness(const CockadeRecipe& recipe,
                                            std::uint64_t node_budget) {
    Stopwatch timer;
    VerificationReport rep;
    rep.claim = "cockade-tightness";
    Graph g = build_cockade(recipe);
    rep.universe = 1;
    rep.details = {{"copies", recipe.copies},
                   {"n", g.n()},
                   {"edges", g.edge_count()}};

    MinorResult lower = find_minor(g, PatternSpec::family(8, 3), node_budget);
    rep.search_nodes += lower.nodes;
    if (lower.status == SearchStatus::budget_exceeded)
        rep.failed_checks.push_back("(8,3) search exceeded the node budget");
    else if (lower.found()) {
        rep.failed_checks.push_back("cockade has an (8,3) minor");
        rep.counterexamples.push_back(to_graph6(g));
    }
    rep.details["k8m3_minor"] = lower.found();

    MinorResult upper = find_minor(g, PatternSpec::family(8, 4), node_budget);
    rep.search_nodes += upper.nodes;
    if (upper.status == SearchStatus::budget_exceeded)
        rep.failed_checks.push_back("(8,4) search exceeded the node budget");
    else if (!upper.found() ||
             !verify_embedding(g, PatternSpec::family(8, 4), *upper.embedding)) {
        rep.failed_checks.push_back("cockade lacks an (8,4) minor");
        rep.counterexamples.push_back(to_graph6(g));
    }
    rep.details["k8m4_minor"] = upper.found();
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

VerificationReport random_extremal_test(int n, int trials, std::uint64_t seed) {
    if (n < 8 || n > 14)
        throw std::invalid_argument("random_extremal_test supports 8 <= n <= 14");
    Stopwatch timer;
    VerificationReport rep;
    rep.claim = "extremal-density-forces-minor";
    int m = extremal_edge_target(n);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = trial_rng(seed, static_cast<uint64_t>(n), static_cast<uint64_t>(trial));
        std::shuffle(pairs.begin(), pairs.end(), rng);
        Graph g(n, {pairs.begin(), pairs.begin() + m});
        rep.universe += 1;
        MinorResult r = find_minor(g, PatternSpec::family(8, 4));
        rep.search_nodes += r.nodes;
        if (!r.found() || !verify_embedding(g, PatternSpec::family(8, 4), *r.embedding)) {
            rep.failed_checks.push_back("trial " + std::to_string(trial) +
                                        " has no (8,4) minor");
            rep.counterexamples.push_back(to_graph6(g));
        }
    }
    rep.details = {{"n", n},
                   {"edges", m},
                   {"trials", trials},
                   {"seed", seed},
                   {"failures", rep.counterexamples.size()},
                   {"avg_nodes", trials > 0 ? static_cast<double>(rep.search_nodes) / trials : 0.0}};
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

std::pair<int, std::vector<int>> degeneracy(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), order;
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int k = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        k = std::max(k, deg[best]);
        gone[best] = 1;
        order.push_back(best);
        for (int v = 0; v < n; ++v)
            if (!gone[v] && g.has_edge(best, v)) --deg[v];
    }
    return {k, order};
}

void check_separator_instance(const SeparatorInstance& inst) {
    int n = inst.g.n();
    std::vector<int> where(n, -1);
    auto place = [&](const std::vector<int>& vs, int tag) {
        for (int v : vs) {
            if (v < 0 || v >= n) throw std::invalid_argument("instance vertex out of range");
            if (where[v] != -1) throw std::invalid_argument("instance parts overlap");
            where[v] = tag;
        }
    };
    place(inst.separator, 0);
    place(inst.side1, 1);
    place(inst.side2, 2);
    for (int v = 0; v < n; ++v)
        if (where[v] == -1) throw std::invalid_argument("instance parts miss a vertex");
    if (inst.side1.empty() || inst.side2.empty())
        throw std::invalid_argument("both sides must be nonempty");
    for (int u : inst.side1)
        for (int v : inst.side2)
            if (inst.g.has_edge(u, v))
                throw std::invalid_argument("separator does not separate the sides");
}

namespace {

// Exact search for the contraction gain: per separator vertex, grow a
// connected set over the side vertices (include/forbid, so each set is
// visited once) and track newly connected missing pairs; prune when the
// pairs still open cannot beat the best.
struct GainSearch {
    int p = 0;
    std::vector<uint64_t> adj;            // induced on S (0..p-1) then side
    std::vector<uint64_t> miss_lower;     // per j, missing S pairs {a, j}, a < j
    std::vector<uint64_t> sets;
    int best = 0, total_missing = 0;

    void place(int j, int gain, uint64_t avail) {
        if (best == total_missing) return;
        if (j == p) {
            best = std::max(best, gain);
            return;
        }
        int open = 0;
        for (int b = j; b < p; ++b) open += std::popcount(miss_lower[b]);
        if (gain + open <= best) return;
        grow(j, gain, bit(j), adj[j], 0, avail);
    }

    void grow(int j, int gain, uint64_t S, uint64_t nbr, uint64_t forbidden,
              uint64_t avail) {
        int g2 = gain;
        for (uint64_t m = miss_lower[j]; m;) {
            int a = std::countr_zero(m);
            m &= m - 1;
            if (nbr & sets[a]) ++g2;
        }
        sets[j] = S;
        place(j + 1, g2, avail & ~S);
        uint64_t ext = nbr & avail & ~S & ~forbidden;
        while (ext) {
            int x = std::countr_zero(ext);
            ext &= ext - 1;
            uint64_t S2 = S | bit(x);
            grow(j, gain, S2, (nbr | adj[x]) & ~S2, forbidden, avail);
            forbidden |= bit(x);
        }
    }
};

}  // namespace

int contraction_gain(const SeparatorInstance& inst, int side) {
    check_separator_instance(inst);
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
    const std::vector<int>& b = side == 1 ? inst.side1 : inst.side2;
    if (b.size() > 16)
        throw std::length_error("side too large for exact contraction gain");

    std::vector<int> verts = inst.separator;
    verts.insert(verts.end(), b.begin(), b.end());
    Graph h = induced_subgraph(inst.g, verts);

    GainSearch search;
    search.p = static_cast<int>(inst.separator.size());
    search.adj = adjacency64(h);
    search.sets.assign(search.p, 0);
    search.miss_lower.assign(search.p, 0);
    for (int j = 0; j < search.p; ++j)
        for (int a = 0; a < j; ++a)
            if (!h.has_edge(a, j)) {
                search.miss_lower[j] |= bit(a);
                ++search.total_missing;
            }
    if (search.total_missing == 0) return 0;
    uint64_t avail = 0;
    for (int v = search.p; v < h.n(); ++v) avail |= bit(v);
    search.place(0, 0, avail);
    return search.best;
}

namespace {

// components of g restricted to the vertices outside the separator mask
std::vector<uint64_t> components_outside(const std::vector<uint64_t>& adj, int n,
                                         uint64_t sep) {
    uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    uint64_t left = all & ~sep;
    std::vector<uint64_t> comps;
    while (left) {
        uint64_t comp = left & (~left + 1);
        for (;;) {
            uint64_t grown = comp;
            for (uint64_t m = comp; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                grown |= adj[v] & left;
            }
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

std::vector<int> mask_to_vector(uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

void check_jorgensen_instance(VerificationReport& rep, const SeparatorInstance& inst) {
    rep.universe += 1;
    int es = static_cast<int>(induced_subgraph(inst.g, inst.separator).edge_count());
    if (es >= 5) return;
    if (es + contraction_gain(inst, 1) < 5) {
        rep.failed_checks.push_back("e(S) + d1 < 5 for separator {" +
                                    std::to_string(inst.separator[0]) + "," +
                                    std::to_string(inst.separator[1]) + "," +
                                    std::to_string(inst.separator[2]) + "," +
                                    std::to_string(inst.separator[3]) + "}");
        rep.counterexamples.push_back(to_graph6(inst.g));
    }
}

}  // namespace

VerificationReport verify_jorgensen(int samples_per_n, std::uint64_t seed) {
    Stopwatch timer;
    VerificationReport rep;
    rep.claim = "four-cut-contraction-inequality";
    long exhaustive_hosts = 0;

    for (int n = 7; n <= 9; ++n) {
        GraphFilter f;
        f.min_connectivity = 4;
        all_graphs(n, f, [&](const Graph& g) {
            ++exhaustive_hosts;
            auto adj = adjacency64(g);
            std::vector<int> sep(4);
            for (sep[0] = 0; sep[0] < n; ++sep[0])
                for (sep[1] = sep[0] + 1; sep[1] < n; ++sep[1])
                    for (sep[2] = sep[1] + 1; sep[2] < n; ++sep[2])
                        for (sep[3] = sep[2] + 1; sep[3] < n; ++sep[3]) {
                            uint64_t sm = bit(sep[0]) | bit(sep[1]) | bit(sep[2]) | bit(sep[3]);
                            auto comps = components_outside(adj, n, sm);
                            if (comps.size() < 2) continue;
                            // every side assignment: side1 is a nonempty
                            // proper union of components with >= 2 vertices
                            for (uint64_t m = 1; m + 1 < (uint64_t{1} << comps.size()); ++m) {
                                uint64_t s1 = 0, s2 = 0;
                                for (std::size_t c = 0; c < comps.size(); ++c)
                                    ((m >> c) & 1 ? s1 : s2) |= comps[c];
                                if (std::popcount(s1) < 2) continue;
                                SeparatorInstance inst{g, sep, mask_to_vector(s1),
                                                       mask_to_vector(s2)};
                                check_jorgensen_instance(rep, inst);
                            }
                        }
        });
    }
    long exhaustive_instances = rep.universe;

    for (int n = 10; n <= 11; ++n)
        for (int trial = 0; trial < samples_per_n; ++trial) {
            auto rng = trial_rng(seed, static_cast<uint64_t>(n),
                                 static_cast<uint64_t>(trial));
            for (int attempt = 0;; ++attempt) {
                if (attempt > 100000)
                    throw std::logic_error("could not sample a 4-connected instance");
                int a = 2 + static_cast<int>(rng() % (n - 6));  // 2 <= a <= n-5
                std::vector<int> sep = {0, 1, 2, 3}, s1, s2;
                for (int v = 4; v < 4 + a; ++v) s1.push_back(v);
                for (int v = 4 + a; v < n; ++v) s2.push_back(v);
                double p = 0.5 + 0.35 * std::uniform_real_distribution<>(0, 1)(rng);
                std::bernoulli_distribution flip(p);
                Graph g(n);
                auto fill = [&](const std::vector<int>& side) {
                    std::vector<int> verts = sep;
                    verts.insert(verts.end(), side.begin(), side.end());
                    for (std::size_t i = 4; i < verts.size(); ++i)
                        for (std::size_t j = 0; j < i; ++j)
                            if (flip(rng)) g.add_edge(verts[i], verts[j]);
                };
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        if (flip(rng)) g.add_edge(i, j);
                fill(s1);
                fill(s2);
                if (vertex_connectivity(g) != 4) continue;
                check_jorgensen_instance(rep, {std::move(g), sep, s1, s2});
                break;
            }
        }

    rep.details = {{"exhaustive_max_n", 9},
                   {"exhaustive_hosts", exhaustive_hosts},
                   {"exhaustive_instances", exhaustive_instances},
                   {"samples_per_n", samples_per_n},
                   {"sampled_n", {10, 11}},
                   {"seed", seed}};
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

}  // namespace minorforge
