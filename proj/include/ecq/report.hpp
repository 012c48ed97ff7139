#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecq/ranking.hpp"

namespace ecq {

/// Everything needed to reproduce one solve run, mirroring the result-table
/// columns: graph summary, method, full parameter echo, ground sets, and the
/// comparison against classical eigenvector centrality.
struct RunReport {
    int format_version = 1;

    std::string graph_name;
    int n = 0;
    std::uint64_t m = 0;
    double density = 0.0;

    std::string method;  // solver name
    int tau = 0;
    double p0 = 0.0;
    double p1 = 0.0;
    std::uint64_t reads = 0;
    std::uint64_t sweeps = 0;
    std::uint64_t seed = 0;

    std::vector<std::vector<int>> ground_sets;
    double ground_energy = 0.0;
    std::uint64_t degeneracy = 0;

    std::vector<int> ec_top_tau;
    std::vector<int> ec_tie_group;
    bool matches_ec = false;  // tie-aware set agreement
    bool warning = false;     // e.g. best sample violates the cardinality

    double runtime_ms = 0.0;

    bool operator==(const RunReport&) const = default;
};

void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

std::string rank_report_json(const TauSweep& sweep, const RankReport& report,
                             const std::vector<double>& ec_scores);

}  // namespace ecq
