#pragma once

#include <cstdint>
#include <vector>

#include "ecq/graph.hpp"

namespace ecq {

struct CentralityVector {
    std::vector<double> scores;  // unit 2-norm, non-negative
    double lambda1 = 0.0;        // dominant eigenvalue of A
    int iterations = 0;
    double residual = 0.0;       // max_i |(A x)_i - lambda1 x_i|
};

/// Power iteration on A + I from the all-ones start vector; the shift
/// guarantees convergence on connected bipartite graphs and leaves the
/// eigenvectors unchanged. lambda1 is the Rayleigh quotient on A itself.
/// Throws on disconnected graphs and on non-convergence.
CentralityVector eigencentrality(const Graph& g, double tol = 1e-10, int max_iter = 10000);

/// d_i / (n - 1); requires n >= 2.
std::vector<double> degree_centrality(const Graph& g);

struct WalkCentrality {
    double gamma = 0.0;
    std::vector<double> scores;  // c_i = (rowsum_i exp(gamma A) - 1) / gamma
};

/// Exponential walk count per node. The induced ranking interpolates from
/// degree centrality (gamma -> 0+) to eigenvector centrality (gamma -> inf).
WalkCentrality walk_centrality(const Graph& g, double gamma);

struct RelaxationResult {
    std::vector<double> scores;  // unit 2-norm, component sum positive
    double objective = 0.0;      // best value of -x'Ax + P(sum x_i^2 - 1)^2
    bool converged = false;
};

/// Classical relaxation: minimize -x'Ax + P(sum x_i^2 - 1)^2 over real x by
/// Nelder-Mead (reflect 1, expand 2, contract 0.5, shrink 0.5, stop when the
/// simplex f-spread drops below 1e-10), multi-started from seeded random
/// points in [0,1]^n. Restarts run concurrently; restart k uses
/// derive_seed(seed, k) so the result is schedule-independent. The returned
/// vector is scaled to unit length (the raw minimizer's norm depends on P,
/// which is irrelevant to a centrality ranking).
RelaxationResult penalty_relaxation(const Graph& g, double penalty = 10.0, int restarts = 8,
                                    std::uint64_t seed = 1);

struct TopTau {
    std::vector<int> nodes;      // tau nodes, score descending, id ascending on ties
    std::vector<int> tie_group;  // nodes whose score ties the boundary score
    bool boundary_tied = false;  // true when the tie group spans the tau cut
};

/// The tau highest-scoring nodes with tie diagnostics so set comparisons can
/// be tie-aware.
TopTau top_tau(const std::vector<double>& scores, int tau, double tie_tol = 1e-6);

/// True when `candidate` is a valid tie-aware top-|candidate| of ref_scores:
/// it contains every node strictly above the boundary tie and fills the rest
/// from the boundary tie group.
bool tie_aware_top_match(const std::vector<double>& ref_scores, const std::vector<int>& candidate,
                         double tie_tol = 1e-6);

/// Score-descending rank groups, adjacent scores within tie_tol chained into
/// one group. Used for ranking displays and tie-aware comparisons.
std::vector<std::vector<int>> rank_groups(const std::vector<double>& scores, double tie_tol = 1e-6);

}  // namespace ecq
