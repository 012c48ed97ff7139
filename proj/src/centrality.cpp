#include "ecq/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ecq/nelder_mead.hpp"
#include "ecq/rng.hpp"

namespace ecq {

CentralityVector eigencentrality(const Graph& g, double tol, int max_iter) {
    if (!g.connected()) throw std::domain_error("eigencentrality requires a connected graph");
    const int n = g.node_count();
    const auto& adj = g.neighbors();

    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(static_cast<std::size_t>(n));

    CentralityVector out;
    for (int it = 1; it <= max_iter; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j : adj[static_cast<std::size_t>(i)]) s += x[static_cast<std::size_t>(j)];
            ax[static_cast<std::size_t>(i)] = s;
        }
        const double lambda = dot(x, ax);  // Rayleigh quotient on A; x is unit
        double resid = 0.0;
        for (int i = 0; i < n; ++i)
            resid = std::max(resid, std::abs(ax[static_cast<std::size_t>(i)] -
                                             lambda * x[static_cast<std::size_t>(i)]));
        out.iterations = it;
        out.lambda1 = lambda;
        out.residual = resid;
        if (resid <= tol) {
            out.scores = x;
            return out;
        }
        // One step of power iteration on A + I; the shift keeps bipartite
        // spectra from oscillating and leaves the eigenvectors alone.
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            ax[k] += x[k];
            norm += ax[k] * ax[k];
        }
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            x[k] = ax[k] / norm;
        }
    }
    throw std::runtime_error("eigencentrality did not converge within " +
                             std::to_string(max_iter) + " iterations");
}

std::vector<double> degree_centrality(const Graph& g) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("degree centrality undefined for n < 2");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        out[static_cast<std::size_t>(v)] = static_cast<double>(g.degree(v)) / (n - 1);
    return out;
}

WalkCentrality walk_centrality(const Graph& g, double gamma) {
    if (gamma <= 0.0) throw std::invalid_argument("walk centrality requires gamma > 0");
    const int n = g.node_count();
    Matrix ga = adjacency(g);
    ga *= gamma;
    Matrix e = matrix_exponential(ga);
    WalkCentrality wc;
    wc.gamma = gamma;
    wc.scores.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j < n; ++j) rowsum += e(i, j);
        // v_i = rowsum of exp(gamma A); series coefficients a_0 = a_1 = 1.
        wc.scores[static_cast<std::size_t>(i)] = (rowsum - 1.0) / gamma;
    }
    return wc;
}

RelaxationResult penalty_relaxation(const Graph& g, double penalty, int restarts,
                                    std::uint64_t seed) {
    if (penalty <= 0.0) throw std::invalid_argument("penalty must be positive");
    if (restarts < 1) throw std::invalid_argument("at least one restart required");
    const int n = g.node_count();
    const auto& adj = g.neighbors();

    auto objective = [&](const std::vector<double>& x) {
        double xax = 0.0, ss = 0.0;
        for (int i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            double s = 0.0;
            for (int j : adj[k]) s += x[static_cast<std::size_t>(j)];
            xax += x[k] * s;
            ss += x[k] * x[k];
        }
        const double c = ss - 1.0;
        return -xax + penalty * c * c;
    };

    std::vector<NelderMeadResult> results(static_cast<std::size_t>(restarts));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < restarts; ++k) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        std::vector<double> x0(static_cast<std::size_t>(n));
        for (auto& v : x0) v = rng.uniform();
        results[static_cast<std::size_t>(k)] = nelder_mead(objective, x0);
    }

    // Best over restarts; strict comparison keeps the pick schedule-independent.
    std::size_t best = 0;
    for (std::size_t k = 1; k < results.size(); ++k)
        if (results[k].fx < results[best].fx) best = k;

    RelaxationResult out;
    out.objective = results[best].fx;
    out.converged = results[best].converged;
    out.scores = std::move(results[best].x);
    double sum = std::accumulate(out.scores.begin(), out.scores.end(), 0.0);
    if (sum < 0.0)
        for (auto& v : out.scores) v = -v;
    const double norm = norm2(out.scores);
    if (norm > 0.0)
        for (auto& v : out.scores) v /= norm;
    return out;
}

TopTau top_tau(const std::vector<double>& scores, int tau, double tie_tol) {
    const int n = static_cast<int>(scores.size());
    if (tau < 1 || tau > n) throw std::invalid_argument("tau out of range [1, n]");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double sa = scores[static_cast<std::size_t>(a)];
        const double sb = scores[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return a < b;
    });
    TopTau out;
    out.nodes.assign(order.begin(), order.begin() + tau);
    const double boundary = scores[static_cast<std::size_t>(order[static_cast<std::size_t>(tau - 1)])];
    for (int v = 0; v < n; ++v)
        if (std::abs(scores[static_cast<std::size_t>(v)] - boundary) <= tie_tol)
            out.tie_group.push_back(v);
    // The tie spans the cut when it reaches past position tau or holds more
    // members than the cut has room for.
    if (tau < n) {
        const double after = scores[static_cast<std::size_t>(order[static_cast<std::size_t>(tau)])];
        out.boundary_tied = std::abs(after - boundary) <= tie_tol;
    }
    std::sort(out.nodes.begin(), out.nodes.end());
    return out;
}

bool tie_aware_top_match(const std::vector<double>& ref_scores, const std::vector<int>& candidate,
                         double tie_tol) {
    const int tau = static_cast<int>(candidate.size());
    if (tau < 1 || tau > static_cast<int>(ref_scores.size())) return false;
    TopTau ref = top_tau(ref_scores, tau, tie_tol);
    // Candidate must contain every selected node outside the boundary tie and
    // draw the rest from the tie group.
    std::vector<char> in_tie(ref_scores.size(), 0);
    for (int v : ref.tie_group) in_tie[static_cast<std::size_t>(v)] = 1;
    std::vector<char> chosen(ref_scores.size(), 0);
    for (int v : candidate) {
        if (v < 0 || v >= static_cast<int>(ref_scores.size()) || chosen[static_cast<std::size_t>(v)])
            return false;
        chosen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : ref.nodes)
        if (!in_tie[static_cast<std::size_t>(v)] && !chosen[static_cast<std::size_t>(v)])
            return false;  // missed a must-have node
    for (int v : candidate)
        if (!in_tie[static_cast<std::size_t>(v)]) {
            // non-tie picks must be genuine top nodes
            if (std::find(ref.nodes.begin(), ref.nodes.end(), v) == ref.nodes.end()) return false;
        }
    return true;
}

std::vector<std::vector<int>> rank_groups(const std::vector<double>& scores, double tie_tol) {
    const int n = static_cast<int>(scores.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double sa = scores[static_cast<std::size_t>(a)];
        const double sb = scores[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return a < b;
    });
    std::vector<std::vector<int>> groups;
    for (int v : order) {
        if (!groups.empty() &&
            std::abs(scores[static_cast<std::size_t>(groups.back().back())] -
                     scores[static_cast<std::size_t>(v)]) <= tie_tol) {
            groups.back().push_back(v);
        } else {
            groups.push_back({v});
        }
    }
    return groups;
}

}  // namespace ecq
