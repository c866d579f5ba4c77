#include "minorforge/report.hpp"

namespace minorforge {

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["claim"] = claim;
    j["universe"] = universe;
    j["counterexamples"] = counterexamples;
    j["failed_checks"] = failed_checks;
    j["ok"] = ok();
    j["search_nodes"] = search_nodes;
    if (!details.is_null()) j["details"] = details;
    if (with_timing) j["timing"] = {{"elapsed_ms", elapsed_ms}};
    return j;
}

nlohmann::json embedding_to_json(const MinorEmbedding& emb) {
    nlohmann::json j;
    j["branch_sets"] = emb.branch_sets;
    j["missing_pairs"] = nlohmann::json::array();
    for (auto [a, b] : emb.missing_pairs) j["missing_pairs"].push_back({a, b});
    return j;
}

MinorEmbedding embedding_from_json(const nlohmann::json& j) {
    MinorEmbedding emb;
    emb.branch_sets = j.at("branch_sets").get<std::vector<std::vector<int>>>();
    for (const auto& p : j.at("missing_pairs"))
        emb.missing_pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return emb;
}

}  // namespace minorforge
