#include "minorforge/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minorforge/canonical.hpp"
#include "minorforge/coloring.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/extremal.hpp"
#include "minorforge/graph6.hpp"
#include "minorforge/lemmas.hpp"
#include "minorforge/minor.hpp"
#include "minorforge/report.hpp"
#include "minorforge/subgraph.hpp"

namespace minorforge {

namespace {

using nlohmann::json;

// graph argument: a graph6 literal, @path to a graph6 file, or "-" for stdin
Graph parse_graph_arg(const std::string& arg, std::istream& in) {
    std::string text;
    if (arg == "-") {
        std::getline(in, text);
    } else if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw std::runtime_error("cannot open " + arg.substr(1));
        std::getline(f, text);
    } else {
        text = arg;
    }
    return from_graph6(text);
}

PatternSpec parse_pattern_arg(const std::string& arg) {
    if (arg.rfind("kts:", 0) == 0) {
        std::istringstream ss(arg.substr(4));
        int t = 0, s = 0;
        char comma = 0;
        if (!(ss >> t >> comma >> s) || comma != ',' || !ss.eof())
            throw std::runtime_error("pattern must be kts:t,s or graph6");
        return PatternSpec::family(t, s);
    }
    return PatternSpec::explicit_graph(from_graph6(arg));
}

int report_exit(const VerificationReport& rep) {
    for (const std::string& f : rep.failed_checks)
        if (f.find("budget") != std::string::npos) return kExitBudget;
    return rep.ok() ? kExitFound : kExitNegative;
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

// cache for minor queries, keyed by host canonical form + query string
class ResultCache {
public:
    ResultCache() {
        if (const char* dir = std::getenv("MINORFORGE_CACHE")) dir_ = dir;
    }

    bool enabled() const { return !dir_.empty(); }

    std::optional<json> load(const std::string& key) const {
        std::ifstream f(path(key));
        if (!f) return std::nullopt;
        json j = json::parse(f, nullptr, false);
        if (j.is_discarded() || j.value("schema", 0) != kReportSchema ||
            j.value("key", "") != key)
            return std::nullopt;
        return j;
    }

    void store(const std::string& key, json j) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        j["schema"] = kReportSchema;
        j["key"] = key;
        std::ofstream f(path(key));
        f << j.dump() << "\n";
    }

private:
    std::string path(const std::string& key) const {
        std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
        for (unsigned char c : key) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        char name[32];
        std::snprintf(name, sizeof name, "%016llx.json",
                      static_cast<unsigned long long>(h));
        return dir_ + "/" + name;
    }

    std::string dir_;
};

std::string hex_key(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

VerificationReport merged_configuration_report() {
    Stopwatch timer;
    VerificationReport rep;
    rep.claim = "three-clique-configurations";
    auto configs = generate_configurations();
    json per_class = json::array();
    for (const auto& cfg : configs) {
        VerificationReport sub = verify_configuration_minor(cfg);
        rep.universe += sub.universe;
        rep.search_nodes += sub.search_nodes;
        rep.counterexamples.insert(rep.counterexamples.end(),
                                   sub.counterexamples.begin(),
                                   sub.counterexamples.end());
        rep.failed_checks.insert(rep.failed_checks.end(),
                                 sub.failed_checks.begin(), sub.failed_checks.end());
        per_class.push_back(sub.details);
    }
    if (configs.size() != 9)
        rep.failed_checks.push_back("configuration class count != 9");
    rep.details = {{"classes", configs.size()}, {"per_class", per_class}};
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

VerificationReport figure1_corollary_report() {
    Stopwatch timer;
    VerificationReport rep;
    rep.claim = "figure1-complements-contain-every-family-complement";
    GraphFilter eight;
    eight.exact_edges = 8;
    const Graph pm(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    const Graph triangle = complete(3);
    const Graph c4 = cycle(4);
    all_graphs(8, eight, [&](const Graph& hbar) {
        if (!(hbar.max_degree() >= 4 && subgraph_embed(pm, hbar) &&
              subgraph_embed(triangle, hbar) && subgraph_embed(c4, hbar)))
            return;
        rep.universe += 1;
        if (!verify_corollary_k84(hbar)) {
            rep.failed_checks.push_back("a candidate complement fails the subgraph condition");
            rep.counterexamples.push_back(to_graph6(hbar));
        }
    });
    rep.details = {{"candidates", rep.universe}};
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

int cmd_verify(const std::string& target, int samples, int copies, int n,
               int trials, std::uint64_t seed, std::uint64_t budget,
               bool with_timing, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
    VerificationReport rep;
    if (target == "lemma-h8")
        rep = verify_h8_lemma();
    else if (target == "lemma-k64")
        rep = verify_k64_lemma();
    else if (target == "family-counts")
        rep = verify_family_counts();
    else if (target == "configs")
        rep = merged_configuration_report();
    else if (target == "corollary-k84")
        rep = figure1_corollary_report();
    else if (target == "gadgets")
        rep = verify_proof_gadgets();
    else if (target == "jorgensen")
        rep = verify_jorgensen(samples, seed);
    else if (target == "cockade")
        rep = verify_cockade_tightness(CockadeRecipe::chain(copies), budget);
    else if (target == "extremal")
        rep = random_extremal_test(n, trials, seed);
    else {
        err << "unknown verify target: " << target << "\n";
        return kExitUsage;
    }
    json j = rep.to_json(with_timing);
    j["seed"] = seed;
    j["budget"] = budget;
    emit(j, out_path, out);
    return report_exit(rep);
}

int cmd_minor(const std::string& graph_arg, const std::string& pattern_arg,
              std::uint64_t budget, bool with_timing, const std::string& out_path,
              std::ostream& out) {
    Graph g = parse_graph_arg(graph_arg, std::cin);
    PatternSpec pattern = parse_pattern_arg(pattern_arg);
    std::string key = "minor/" + hex_key(canonical_form(g)) + "/" + pattern_arg +
                      "/" + std::to_string(budget);

    ResultCache cache;
    json j;
    Stopwatch timer;
    if (auto hit = cache.enabled() ? cache.load(key) : std::nullopt) {
        j = *hit;
        j.erase("key");  // cache bookkeeping, not part of the answer
        j["cache_hit"] = true;
    } else {
        MinorResult r = find_minor(g, pattern, budget);
        j["schema"] = kReportSchema;
        j["status"] = r.status == SearchStatus::found        ? "found"
                      : r.status == SearchStatus::no_minor   ? "none"
                                                             : "unknown";
        j["nodes"] = r.nodes;
        if (r.embedding) {
            if (!verify_embedding(g, pattern, *r.embedding))
                throw std::logic_error("search returned an invalid embedding");
            j["embedding"] = embedding_to_json(*r.embedding);
        }
        if (cache.enabled()) cache.store(key, j);
        j["cache_hit"] = false;
    }
    j["budget"] = budget;
    if (with_timing) j["timing"] = {{"elapsed_ms", timer.elapsed_ms()}};
    emit(j, out_path, out);
    std::string status = j["status"];
    return status == "found" ? kExitFound : status == "none" ? kExitNegative : kExitBudget;
}

int cmd_color(const std::string& graph_arg, bool certify, std::uint64_t budget,
              bool with_timing, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    Graph g = parse_graph_arg(graph_arg, std::cin);
    if (certify && g.n() > 16) {
        err << "--certify requires n <= 16\n";
        return kExitUsage;
    }
    Stopwatch timer;
    SevenColorOutcome res = seven_color_or_minor(g, budget);
    json j;
    j["schema"] = kReportSchema;
    j["budget"] = budget;
    if (res.coloring) {
        j["coloring"] = res.coloring->color;
        j["palette"] = res.coloring->palette_size();
    } else if (res.minor) {
        j["minor"] = embedding_to_json(*res.minor);
    }
    j["unresolved"] = res.unresolved;
    j["theorem_falsified"] = res.theorem_falsified;
    if (with_timing) j["timing"] = {{"elapsed_ms", timer.elapsed_ms()}};
    emit(j, out_path, out);
    if (res.coloring || res.minor) return kExitFound;
    return res.unresolved ? kExitBudget : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact small-graph minor search and verification harness"};
    app.require_subcommand(1);

    std::string out_path;
    bool no_timing = false;
    std::uint64_t budget = kDefaultNodeBudget;
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_flag("--no-timing", no_timing, "omit timing for byte-stable output");
    app.add_option("--budget", budget, "search node budget");

    auto* verify = app.add_subcommand("verify", "run a verification target");
    std::string target;
    int samples = 1000, copies = 2, ex_n = 12, trials = 200;
    std::uint64_t seed = 1;
    verify->add_option("target", target,
                       "one of lemma-h8, lemma-k64, family-counts, configs, "
                       "corollary-k84, gadgets, jorgensen, cockade, extremal")
        ->required();
    verify->add_option("--samples", samples, "sampled instances per n (jorgensen)");
    verify->add_option("--copies", copies, "cockade copies");
    verify->add_option("--n", ex_n, "vertex count (extremal)");
    verify->add_option("--trials", trials, "random trials (extremal)");
    verify->add_option("--seed", seed, "PRNG seed");

    auto* minor = app.add_subcommand("minor", "search for a minor");
    std::string graph_arg, pattern_arg;
    minor->add_option("--graph", graph_arg, "host graph (graph6, @file, or -)")->required();
    minor->add_option("--pattern", pattern_arg, "pattern (kts:t,s or graph6)")->required();

    auto* color = app.add_subcommand("color", "7-coloring or minor certificate");
    std::string color_graph;
    bool certify = false;
    color->add_option("--graph", color_graph, "graph (graph6, @file, or -)")->required();
    color->add_flag("--certify", certify, "force exact mode (n <= 16)");

    auto* enumerate = app.add_subcommand("enumerate", "stream isomorphism classes as graph6");
    int en_n = 0;
    bool count_only = false;
    GraphFilter filter;
    int min_deg = -1, max_deg = -1, exact_edges = -1, alpha_max = -1, min_conn = -1;
    enumerate->add_option("-n", en_n, "vertex count (1..10)")->required();
    enumerate->add_option("--min-degree", min_deg, "minimum degree");
    enumerate->add_option("--max-degree", max_deg, "maximum degree");
    enumerate->add_option("--exact-edges", exact_edges, "exact edge count");
    enumerate->add_option("--alpha-max", alpha_max, "independence number at most");
    enumerate->add_option("--min-connectivity", min_conn, "vertex connectivity at least");
    enumerate->add_flag("--count", count_only, "emit a JSON count instead of graph6 lines");

    auto* cockade = app.add_subcommand("cockade", "build a cockade and print its graph6");
    int ck_copies = 1;
    std::string schedule_path;
    cockade->add_option("--copies", ck_copies, "number of glued copies")->required();
    cockade->add_option("--schedule", schedule_path,
                        "JSON file [{\"target\":[..4 ints..],\"fresh\":[..4 ints..]}, ...]; "
                        "defaults to the chain schedule");

    auto* extremal = app.add_subcommand("extremal", "random extremal density trials");
    int rx_n = 12, rx_trials = 200;
    std::uint64_t rx_seed = 1;
    extremal->add_option("--n", rx_n, "vertex count (8..14)")->required();
    extremal->add_option("--trials", rx_trials, "number of trials");
    extremal->add_option("--seed", rx_seed, "PRNG seed");

    // let --out/--no-timing/--budget appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitFound;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(target, samples, copies, ex_n, trials, seed, budget,
                              !no_timing, out_path, out, err);
        if (minor->parsed())
            return cmd_minor(graph_arg, pattern_arg, budget, !no_timing, out_path, out);
        if (color->parsed())
            return cmd_color(color_graph, certify, budget, !no_timing, out_path, out, err);
        if (enumerate->parsed()) {
            if (min_deg >= 0) filter.min_degree = min_deg;
            if (max_deg >= 0) filter.max_degree = max_deg;
            if (exact_edges >= 0) filter.exact_edges = exact_edges;
            if (alpha_max >= 0) filter.alpha_at_most = alpha_max;
            if (min_conn >= 0) filter.min_connectivity = min_conn;
            if (count_only) {
                json j = {{"schema", kReportSchema},
                          {"n", en_n},
                          {"count", count_graphs(en_n, filter)}};
                emit(j, out_path, out);
            } else {
                std::ostringstream lines;
                all_graphs(en_n, filter,
                           [&](const Graph& g) { lines << to_graph6(g) << "\n"; });
                if (out_path.empty()) {
                    out << lines.str();
                } else {
                    std::ofstream f(out_path);
                    f << lines.str();
                }
            }
            return kExitFound;
        }
        if (cockade->parsed()) {
            CockadeRecipe recipe = CockadeRecipe::chain(ck_copies);
            if (!schedule_path.empty()) {
                std::ifstream f(schedule_path);
                if (!f) throw std::runtime_error("cannot open " + schedule_path);
                json j = json::parse(f);
                recipe.schedule.clear();
                for (const auto& step : j) {
                    GlueStep gs;
                    for (int i = 0; i < 4; ++i) {
                        gs.target[i] = step.at("target").at(i).get<int>();
                        gs.fresh[i] = step.at("fresh").at(i).get<int>();
                    }
                    recipe.schedule.push_back(gs);
                }
                recipe.copies = static_cast<int>(recipe.schedule.size()) + 1;
            }
            out << to_graph6(build_cockade(recipe)) << "\n";
            return kExitFound;
        }
        if (extremal->parsed()) {
            VerificationReport rep = random_extremal_test(rx_n, rx_trials, rx_seed);
            json j = rep.to_json(!no_timing);
            j["seed"] = rx_seed;
            emit(j, out_path, out);
            return report_exit(rep);
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace minorforge
