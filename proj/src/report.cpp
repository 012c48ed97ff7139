#include "ecq/report.hpp"

namespace ecq {

void to_json(nlohmann::json& j, const RunReport& r) {
    j = nlohmann::json{{"format_version", r.format_version},
                       {"graph", {{"name", r.graph_name}, {"n", r.n}, {"m", r.m}, {"density", r.density}}},
                       {"method", r.method},
                       {"params",
                        {{"tau", r.tau},
                         {"p0", r.p0},
                         {"p1", r.p1},
                         {"reads", r.reads},
                         {"sweeps", r.sweeps},
                         {"seed", r.seed}}},
                       {"result",
                        {{"ground_sets", r.ground_sets},
                         {"ground_energy", r.ground_energy},
                         {"degeneracy", r.degeneracy}}},
                       {"reference",
                        {{"ec_top_tau", r.ec_top_tau},
                         {"ec_tie_group", r.ec_tie_group},
                         {"matches_ec", r.matches_ec}}},
                       {"warning", r.warning},
                       {"runtime_ms", r.runtime_ms}};
}

void from_json(const nlohmann::json& j, RunReport& r) {
    j.at("format_version").get_to(r.format_version);
    const auto& g = j.at("graph");
    g.at("name").get_to(r.graph_name);
    g.at("n").get_to(r.n);
    g.at("m").get_to(r.m);
    g.at("density").get_to(r.density);
    j.at("method").get_to(r.method);
    const auto& p = j.at("params");
    p.at("tau").get_to(r.tau);
    p.at("p0").get_to(r.p0);
    p.at("p1").get_to(r.p1);
    p.at("reads").get_to(r.reads);
    p.at("sweeps").get_to(r.sweeps);
    p.at("seed").get_to(r.seed);
    const auto& res = j.at("result");
    res.at("ground_sets").get_to(r.ground_sets);
    res.at("ground_energy").get_to(r.ground_energy);
    res.at("degeneracy").get_to(r.degeneracy);
    const auto& ref = j.at("reference");
    ref.at("ec_top_tau").get_to(r.ec_top_tau);
    ref.at("ec_tie_group").get_to(r.ec_tie_group);
    ref.at("matches_ec").get_to(r.matches_ec);
    j.at("warning").get_to(r.warning);
    j.at("runtime_ms").get_to(r.runtime_ms);
}

std::string rank_report_json(const TauSweep& sweep, const RankReport& report,
                             const std::vector<double>& ec_scores) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["graph"] = sweep.graph_id;
    j["solver"] = sweep.solver;
    auto recs = nlohmann::json::array();
    for (const auto& r : sweep.records)
        recs.push_back({{"tau", r.tau},
                        {"ground_sets", r.ground_sets},
                        {"ground_energy", r.ground_energy},
                        {"degenerate", r.degenerate},
                        {"weight_ok", r.weight_ok}});
    j["sweep"] = std::move(recs);
    auto order = nlohmann::json::array();
    for (const auto& e : report.order)
        order.push_back({{"rank", e.rank},
                         {"nodes", e.nodes},
                         {"tie_alternatives", e.tie_alternatives},
                         {"tie_flagged", e.tie_flagged},
                         {"anomaly", e.anomaly}});
    j["ranking"] = std::move(order);
    j["anomalies"] = report.anomalies;
    if (!ec_scores.empty()) {
        j["ec_scores"] = ec_scores;
        RankAgreement agr = compare_rankings(report, ec_scores);
        j["agreement"] = {{"prefix", agr.prefix},
                          {"per_tau_overlap", agr.per_tau_overlap},
                          {"kendall", agr.kendall}};
    }
    return j.dump(2) + "\n";
}

}  // namespace ecq
