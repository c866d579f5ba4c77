// Acceptance gate: one line per criterion, PASS or FAIL, exit code = number
// of failing criteria. Criterion 2 pins a published count of 5 that exhaustive
// enumeration (and an independent labeled brute force) contradicts; it is
// expected to FAIL honestly. See README.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "minorforge/cliques.hpp"
#include "minorforge/coloring.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/extremal.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/lemmas.hpp"
#include "minorforge/minor.hpp"
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

bool criterion_family_count() {
    GraphFilter f;
    f.exact_edges = 4;
    return count_graphs(8, f) == 11;
}

bool criterion_figure1_count() {
    // pinned expected value: 5; exhaustive enumeration yields 4
    VerificationReport rep = verify_family_counts();
    return rep.details.at("figure1_complements").get<long>() == 5;
}

bool criterion_h8_lemma() { return verify_h8_lemma().ok(); }

bool criterion_k64_lemma() { return verify_k64_lemma().ok(); }

bool criterion_cockade_tightness() {
    for (int c = 1; c <= 3; ++c)
        if (!verify_cockade_tightness(CockadeRecipe::chain(c)).ok()) return false;
    return true;
}

bool criterion_extremal_density() {
    for (int n = 8; n <= 13; ++n)
        if (!random_extremal_test(n, 200, 1).ok()) return false;
    return true;
}

bool criterion_dichotomy() {
    long failures = 0;
    auto check = [&](const Graph& g) {
        SevenColorOutcome out = seven_color_or_minor(g);
        if (out.unresolved || out.theorem_falsified) ++failures;
        if (out.coloring && out.minor) ++failures;
        if (out.coloring) {
            if (!out.coloring->proper(g) || out.coloring->palette_size() > 7)
                ++failures;
        } else if (out.minor) {
            if (!verify_embedding(g, PatternSpec::family(8, 4), *out.minor))
                ++failures;
            ChromaticResult chi = exact_chromatic(g);
            if (!chi.exact() || *chi.chi < 8) ++failures;
        } else {
            ++failures;
        }
    };
    for (int n = 1; n <= 8; ++n) all_graphs(n, {}, check);
    std::mt19937_64 seedgen(2026);
    for (int trial = 0; trial < 10000; ++trial) {
        std::mt19937_64 rng(seedgen());
        int n = 5 + static_cast<int>(rng() % 7);  // 5..11
        double p = 0.10 + 0.085 * (trial % 11);
        check(random_graph(rng, n, p));
    }
    return failures == 0;
}

bool criterion_configurations() {
    std::vector<CliqueConfiguration> configs = generate_configurations();
    if (configs.size() != 9) return false;
    for (const auto& cfg : configs)
        if (!verify_configuration_minor(cfg).ok()) return false;
    return true;
}

bool criterion_gadgets() { return verify_proof_gadgets().ok(); }

bool criterion_oracle_equivalence() {
    // enumeration counts vs the labeled Burnside-free brute force values
    // (classes on 1..6 vertices)
    const long expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n)
        if (count_graphs(n, {}) != static_cast<std::uint64_t>(expected[n - 1]))
            return false;

    // family search vs member-by-member explicit search, exhaustive over all
    // hosts with n <= 9 and every (t <= 6, s <= 4)
    std::vector<std::vector<Graph>> members;
    std::vector<std::pair<int, int>> specs;
    for (int t = 3; t <= 6; ++t)
        for (int s = 0; s <= 4 && s <= t * (t - 1) / 2; ++s) {
            GraphFilter f;
            f.exact_edges = t * (t - 1) / 2 - s;
            members.push_back(all_graphs_list(t, f));
            specs.push_back({t, s});
        }
    long mismatches = 0;
    for (int n = 4; n <= 9; ++n)
        all_graphs(n, {}, [&](const Graph& g) {
            for (std::size_t i = 0; i < specs.size(); ++i) {
                auto [t, s] = specs[i];
                bool family = find_minor(g, PatternSpec::family(t, s)).found();
                bool member = false;
                for (const Graph& m : members[i])
                    if (find_minor(g, PatternSpec::explicit_graph(m)).found()) {
                        member = true;
                        break;
                    }
                if (family != member) ++mismatches;
            }
        });
    if (mismatches != 0) return false;

    // contraction gain vs an unpruned recursive enumeration over every
    // system of disjoint connected sets, on 100 random separator instances
    std::mt19937_64 rng(97);
    for (int done = 0; done < 100;) {
        int p = 3 + static_cast<int>(rng() % 2);
        int n1 = 3 + static_cast<int>(rng() % 4);
        int n2 = 3 + static_cast<int>(rng() % 4);
        int n = p + n1 + n2;
        SeparatorInstance inst;
        inst.g = random_graph(rng, n, 0.45);
        for (int v = 0; v < p; ++v) inst.separator.push_back(v);
        for (int v = p; v < p + n1; ++v) inst.side1.push_back(v);
        for (int v = p + n1; v < n; ++v) inst.side2.push_back(v);
        for (int u : inst.side1)
            for (int v : inst.side2) inst.g.remove_edge(u, v);
        if (oracles::contraction_gain_brute(inst.g, inst.separator, inst.side1) !=
                contraction_gain(inst, 1) ||
            oracles::contraction_gain_brute(inst.g, inst.separator, inst.side2) !=
                contraction_gain(inst, 2))
            return false;
        ++done;
    }
    return true;
}

bool criterion_jorgensen() { return verify_jorgensen(1000, 1).ok(); }

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {"four-edge classes on eight vertices number eleven", criterion_family_count},
        {"eight-edge complement family numbers five (known-irreproducible pin, see README)",
         criterion_figure1_count},
        {"independence-2 graphs on eight vertices contain K4 or the pinned subgraph",
         criterion_h8_lemma},
        {"min-degree-4 graphs on eight vertices lose a vertex to a (6,4) minor",
         criterion_k64_lemma},
        {"cockades with 1..3 copies are extremal and (8,3)-minor-free",
         criterion_cockade_tightness},
        {"200 seeded random graphs per n in 8..13 at the extremal density all have (8,4) minors",
         criterion_extremal_density},
        {"chromatic dichotomy holds on all graphs up to n=8 plus 10,000 seeded random graphs up to n=11",
         criterion_dichotomy},
        {"exactly nine three-clique configurations, each forcing its family minors",
         criterion_configurations},
        {"all explicit contraction gadgets carry their claimed minors", criterion_gadgets},
        {"search engines match independent oracles exactly", criterion_oracle_equivalence},
        {"e(G[S]) + d1 >= 5 on the exhaustive 4-connected corpus and 1,000 samples per n in {10,11}",
         criterion_jorgensen},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::printf("FAIL  %s  (exception: %s)\n", c.name, e.what());
            ++failures;
            continue;
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        std::printf("%s  %s  (%.1fs)\n", ok ? "PASS" : "FAIL", c.name, secs);
        if (!ok) ++failures;
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
