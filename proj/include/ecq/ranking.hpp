#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecq/graph.hpp"
#include "ecq/solvers.hpp"

namespace ecq {

enum class SolverKind { automatic, exhaustive, fixed_weight, sa };

struct SolverConfig {
    SolverKind kind = SolverKind::automatic;
    SaOptions sa;
    double degeneracy_tol = 1e-9;
};

/// Run the configured solver on one QUBO. `automatic` picks exhaustive for
/// n <= 24, else fixed-weight when C(n,tau) fits, else throws CapacityError.
SampleSet run_solver(const QuboMatrix& q, int tau, const SolverConfig& cfg);

struct TauRecord {
    int tau = 0;
    std::vector<std::vector<int>> ground_sets;  // each sorted ascending
    double ground_energy = 0.0;
    bool degenerate = false;
    bool weight_ok = true;  // every ground set has cardinality tau
};

struct TauSweep {
    std::string graph_id;
    std::string solver;
    std::vector<TauRecord> records;  // tau = 1..tau_max in order
};

/// Build the centrality QUBO with default penalties for each tau = 1..tau_max
/// and record all degenerate ground sets. Cardinality violations are recorded
/// via weight_ok, never hidden.
TauSweep tau_sweep(const Graph& g, const SolverConfig& cfg, int tau_max = 0,
                   const std::string& graph_id = "");

struct RankEntry {
    int rank = 0;
    std::vector<int> nodes;             // one node normally; the symmetric
                                        // difference when nesting failed
    std::vector<int> tie_alternatives;  // nodes that could have entered here
    bool tie_flagged = false;
    bool anomaly = false;
};

struct RankReport {
    std::vector<RankEntry> order;
    std::vector<int> anomalies;  // tau values where nesting failed
};

/// Successive-difference rank extraction: pick per tau the sequence-lex
/// smallest ground set that contains the previous choice, so the nested chain
/// S_1 c S_2 c ... is found whenever any degenerate choice permits it; rank r
/// is S_r \ S_{r-1}. When no ground set at some tau contains S_{tau-1}, the
/// entry records the full symmetric difference and the tau is flagged as an
/// anomaly. A rank whose node was chosen among alternatives carries the full
/// alternative list.
RankReport rank_from_sweep(const TauSweep& sweep);

struct RankAgreement {
    int prefix = 0;                      // longest tie-aware exact prefix
    std::vector<double> per_tau_overlap; // |top_t(a) n closure_b(t)| / t
    double kendall = 0.0;                // (C - D)/(C + D) over ref-untied pairs
};

/// Compare an extracted hierarchy against reference centrality scores.
/// Throws if the node universes differ.
RankAgreement compare_rankings(const RankReport& a, const std::vector<double>& ref_scores,
                               double tie_tol = 1e-6);

/// Plain-text table mirroring the three-column sweep/rank layout.
std::string rank_report_table(const TauSweep& sweep, const RankReport& report);

}  // namespace ecq
