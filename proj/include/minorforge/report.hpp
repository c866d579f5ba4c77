#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorforge/minor.hpp"

namespace minorforge {

inline constexpr int kReportSchema = 1;

struct VerificationReport {
    std::string claim;
    long universe = 0;                         // instances checked
    std::vector<std::string> counterexamples;  // graph6
    std::vector<std::string> failed_checks;    // non-graph failures (counts etc.)
    double elapsed_ms = 0;
    std::uint64_t search_nodes = 0;
    nlohmann::json details;  // claim-specific counts and parameters

    bool ok() const { return counterexamples.empty() && failed_checks.empty(); }
    // with_timing=false drops the volatile timing block so reports compare
    // byte-identical across runs
    nlohmann::json to_json(bool with_timing = true) const;
};

nlohmann::json embedding_to_json(const MinorEmbedding& emb);
MinorEmbedding embedding_from_json(const nlohmann::json& j);

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace minorforge
