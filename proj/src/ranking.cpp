#include "ecq/ranking.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ecq/centrality.hpp"
#include "ecq/error.hpp"

namespace ecq {

namespace {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r > cap) return cap + 1;
    }
    return r;
}

bool seq_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool contains_all(const std::vector<int>& super, const std::vector<int>& sub) {
    // both sorted ascending
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

SampleSet run_solver(const QuboMatrix& q, int tau, const SolverConfig& cfg) {
    switch (cfg.kind) {
        case SolverKind::exhaustive:
            return solve_exhaustive(q, cfg.degeneracy_tol);
        case SolverKind::fixed_weight:
            return solve_fixed_weight(q, tau, cfg.degeneracy_tol);
        case SolverKind::sa: {
            SaOptions opt = cfg.sa;
            opt.degeneracy_tol = cfg.degeneracy_tol;
            return solve_sa(q, opt);
        }
        case SolverKind::automatic:
            if (q.size() <= 24) return solve_exhaustive(q, cfg.degeneracy_tol);
            if (binomial_capped(q.size(), tau, 10'000'000) <= 10'000'000)
                return solve_fixed_weight(q, tau, cfg.degeneracy_tol);
            throw CapacityError(
                "graph too large for exact solvers; rerun with the annealing solver");
    }
    throw std::logic_error("unreachable solver kind");
}

TauSweep tau_sweep(const Graph& g, const SolverConfig& cfg, int tau_max,
                   const std::string& graph_id) {
    const int n = g.node_count();
    if (tau_max <= 0 || tau_max > n) tau_max = n;
    TauSweep sweep;
    sweep.graph_id = graph_id;
    sweep.records.reserve(static_cast<std::size_t>(tau_max));
    for (int tau = 1; tau <= tau_max; ++tau) {
        QuboMatrix q = build_ec_qubo(g, tau);
        SampleSet s = run_solver(q, tau, cfg);
        if (sweep.solver.empty()) sweep.solver = s.meta.method;
        TauRecord rec;
        rec.tau = tau;
        rec.ground_energy = s.ground_energy();
        rec.ground_sets = ground_nodes(s);
        rec.degenerate = rec.ground_sets.size() > 1;
        for (const auto& set : rec.ground_sets)
            if (static_cast<int>(set.size()) != tau) rec.weight_ok = false;
        sweep.records.push_back(std::move(rec));
    }
    return sweep;
}

RankReport rank_from_sweep(const TauSweep& sweep) {
    RankReport report;
    std::vector<int> prev;  // the chosen S_{tau-1}, sorted
    for (std::size_t idx = 0; idx < sweep.records.size(); ++idx) {
        const TauRecord& rec = sweep.records[idx];
        if (rec.tau != static_cast<int>(idx) + 1 || rec.ground_sets.empty())
            throw std::invalid_argument("sweep must cover tau = 1..n with ground sets");

        // Candidates that extend the current chain, sequence-lex order.
        const std::vector<int>* chosen = nullptr;
        std::set<int> entrants;
        for (const auto& s : rec.ground_sets) {
            if (!contains_all(s, prev)) continue;
            if (!chosen || seq_lex_less(s, *chosen)) chosen = &s;
            for (int v : s)
                if (!std::binary_search(prev.begin(), prev.end(), v)) entrants.insert(v);
        }

        RankEntry entry;
        entry.rank = rec.tau;
        if (chosen) {
            for (int v : *chosen)
                if (!std::binary_search(prev.begin(), prev.end(), v)) entry.nodes.push_back(v);
            entry.tie_alternatives.assign(entrants.begin(), entrants.end());
            entry.tie_flagged = entry.tie_alternatives.size() > entry.nodes.size();
            prev = *chosen;
        } else {
            // No degenerate choice nests; record the symmetric difference
            // against the lex-smallest set and flag the anomaly.
            const std::vector<int>* fallback = &rec.ground_sets.front();
            for (const auto& s : rec.ground_sets)
                if (seq_lex_less(s, *fallback)) fallback = &s;
            std::vector<int> sym;
            std::set_symmetric_difference(fallback->begin(), fallback->end(), prev.begin(),
                                          prev.end(), std::back_inserter(sym));
            entry.nodes = std::move(sym);
            entry.anomaly = true;
            report.anomalies.push_back(rec.tau);
            prev = *fallback;
        }
        report.order.push_back(std::move(entry));
    }
    return report;
}

RankAgreement compare_rankings(const RankReport& a, const std::vector<double>& ref_scores,
                               double tie_tol) {
    const int n = static_cast<int>(ref_scores.size());
    std::vector<int> linear;
    for (const auto& e : a.order)
        for (int v : e.nodes) linear.push_back(v);
    {
        std::vector<int> check = linear;
        std::sort(check.begin(), check.end());
        for (int v = 0; v < n; ++v)
            if (v >= static_cast<int>(check.size()) || check[static_cast<std::size_t>(v)] != v)
                throw std::invalid_argument("rank report does not cover the score universe");
        if (static_cast<int>(check.size()) != n)
            throw std::invalid_argument("rank report does not cover the score universe");
    }

    RankAgreement out;

    // Longest prefix that is a tie-aware top-k of the reference for every k.
    bool prefix_alive = true;
    out.per_tau_overlap.reserve(static_cast<std::size_t>(n));
    std::vector<int> head;
    for (int k = 1; k <= n; ++k) {
        head.push_back(linear[static_cast<std::size_t>(k - 1)]);
        if (prefix_alive && tie_aware_top_match(ref_scores, head, tie_tol))
            out.prefix = k;
        else
            prefix_alive = false;

        // Overlap against the tie-closed reference top-k.
        TopTau ref = top_tau(ref_scores, k, tie_tol);
        std::set<int> closure(ref.nodes.begin(), ref.nodes.end());
        closure.insert(ref.tie_group.begin(), ref.tie_group.end());
        int hit = 0;
        for (int v : head) hit += closure.count(v) ? 1 : 0;
        out.per_tau_overlap.push_back(static_cast<double>(hit) / k);
    }

    // Kendall-style agreement over pairs the reference distinguishes.
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(linear[static_cast<std::size_t>(k)])] = k;
    long long concordant = 0, discordant = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double du = ref_scores[static_cast<std::size_t>(u)];
            const double dv = ref_scores[static_cast<std::size_t>(v)];
            if (std::abs(du - dv) <= tie_tol) continue;
            const bool ref_u_first = du > dv;
            const bool a_u_first = pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)];
            (ref_u_first == a_u_first ? concordant : discordant) += 1;
        }
    out.kendall = (concordant + discordant) == 0
                      ? 1.0
                      : static_cast<double>(concordant - discordant) /
                            static_cast<double>(concordant + discordant);
    return out;
}

std::string rank_report_table(const TauSweep& sweep, const RankReport& report) {
    std::ostringstream out;
    out << "tau | top-tau ground set | rank -> node\n";
    out << "----+--------------------+-------------\n";
    std::vector<int> chain;
    for (std::size_t i = 0; i < report.order.size(); ++i) {
        const auto& entry = report.order[i];
        for (int v : entry.nodes) chain.push_back(v);
        std::sort(chain.begin(), chain.end());
        out << entry.rank << " | {";
        for (std::size_t k = 0; k < chain.size(); ++k) out << (k ? "," : "") << chain[k];
        out << "} | " << entry.rank << " -> ";
        for (std::size_t k = 0; k < entry.nodes.size(); ++k)
            out << (k ? "," : "") << entry.nodes[k];
        if (entry.tie_flagged) {
            out << "  (tie of {";
            for (std::size_t k = 0; k < entry.tie_alternatives.size(); ++k)
                out << (k ? "," : "") << entry.tie_alternatives[k];
            out << "})";
        }
        if (entry.anomaly) out << "  [anomaly: non-nested]";
        if (i < sweep.records.size() && !sweep.records[i].weight_ok)
            out << "  [weight violation]";
        out << "\n";
    }
    return out.str();
}

}  // namespace ecq
