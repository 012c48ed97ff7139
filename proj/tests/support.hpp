// Shared test fixtures and independent oracles. The enumeration and series
// oracles here deliberately avoid the library's solver/enumeration code paths
// so they can vouch for them.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ecq/bits.hpp"
#include "ecq/graph.hpp"
#include "ecq/matrix.hpp"
#include "ecq/qubo.hpp"

namespace ecqtest {

struct NamedGraph {
    std::string name;
    ecq::Graph graph;
};

/// Named test roster. The first seven are the fixed-topology builtins; the
/// rest are parameterized instances used throughout the golden tables.
inline const std::vector<NamedGraph>& roster() {
    static const std::vector<NamedGraph> r = [] {
        std::vector<NamedGraph> v;
        v.push_back({"bull", ecq::builtin("bull")});
        v.push_back({"sedgewick_maze", ecq::builtin("sedgewick_maze")});
        v.push_back({"florentine_families", ecq::builtin("florentine_families")});
        v.push_back({"g8_spider", ecq::builtin("g8_spider")});
        v.push_back({"lollipop:10,20", ecq::builtin("lollipop", {10, 20})});
        v.push_back({"karate_club", ecq::builtin("karate_club")});
        v.push_back({"tutte", ecq::builtin("tutte")});
        v.push_back({"complete:5", ecq::builtin("complete", {5})});
        v.push_back({"complete_bipartite:3,5", ecq::builtin("complete_bipartite", {3, 5})});
        v.push_back({"path:3", ecq::builtin("path", {3})});
        v.push_back({"path:7", ecq::builtin("path", {7})});
        v.push_back({"star:5", ecq::builtin("star", {5})});
        return v;
    }();
    return r;
}

/// The spec's fixed-roster subset (named single graphs, no parameter families).
inline std::vector<NamedGraph> fixed_roster(int max_n) {
    std::vector<NamedGraph> out;
    for (const auto& ng : roster()) {
        if (ng.name == "bull" || ng.name == "sedgewick_maze" || ng.name == "florentine_families" ||
            ng.name == "g8_spider" || ng.name == "lollipop:10,20" || ng.name == "karate_club" ||
            ng.name == "tutte")
            if (ng.graph.node_count() <= max_n) out.push_back(ng);
    }
    return out;
}

inline std::vector<NamedGraph> roster_upto(int max_n) {
    std::vector<NamedGraph> out;
    for (const auto& ng : roster())
        if (ng.graph.node_count() <= max_n) out.push_back(ng);
    return out;
}

inline std::vector<NamedGraph> connected_roster_upto(int max_n) {
    std::vector<NamedGraph> out;
    for (const auto& ng : roster_upto(max_n))
        if (ng.graph.connected()) out.push_back(ng);
    return out;
}

// --------------------------------------------------------------------------
// Oracles
// --------------------------------------------------------------------------

/// Direct quadratic form, written independently of ecq::qubo_energy.
inline double oracle_energy(const ecq::Matrix& q, std::uint64_t mask) {
    const int n = q.rows();
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!((mask >> i) & 1)) continue;
        for (int j = 0; j < n; ++j)
            if ((mask >> j) & 1) e += q(i, j);
    }
    return e;
}

/// Brute-force ground states over all 2^n masks, ascending mask order.
inline std::pair<double, std::vector<std::uint64_t>> oracle_ground(const ecq::Matrix& q,
                                                                   double tol = 1e-9) {
    const int n = q.rows();
    double best = oracle_energy(q, 0);
    for (std::uint64_t m = 1; m < (1ULL << n); ++m) best = std::min(best, oracle_energy(q, m));
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m)
        if (oracle_energy(q, m) <= best + tol) masks.push_back(m);
    return {best, masks};
}

/// Ground states restricted to Hamming weight tau.
inline std::pair<double, std::vector<std::uint64_t>> oracle_ground_weight(const ecq::Matrix& q,
                                                                          int tau,
                                                                          double tol = 1e-9) {
    const int n = q.rows();
    double best = 0.0;
    bool first = true;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
        if (std::popcount(m) != tau) continue;
        const double e = oracle_energy(q, m);
        if (first || e < best) best = e, first = false;
    }
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m)
        if (std::popcount(m) == tau && oracle_energy(q, m) <= best + tol) masks.push_back(m);
    return {best, masks};
}

inline std::set<std::set<int>> mask_node_sets(const std::vector<std::uint64_t>& masks) {
    std::set<std::set<int>> out;
    for (auto m : masks) {
        std::set<int> s;
        for (int i = 0; i < 64; ++i)
            if ((m >> i) & 1) s.insert(i);
        out.insert(std::move(s));
    }
    return out;
}

/// Plain truncated Taylor sum of exp(m), no scaling tricks.
inline ecq::Matrix oracle_expm_series(const ecq::Matrix& m, int terms) {
    ecq::Matrix sum = ecq::Matrix::identity(m.rows());
    ecq::Matrix term = ecq::Matrix::identity(m.rows());
    for (int k = 1; k <= terms; ++k) {
        term = ecq::reference::matmul(term, m);
        term *= 1.0 / k;
        sum += term;
    }
    return sum;
}

/// Argsort agreement "exact up to tie groups": every pair the reference
/// distinguishes (beyond ref_tol) must be ordered identically by `scores`.
inline bool ranking_matches(const std::vector<double>& scores, const std::vector<double>& ref,
                            double ref_tol) {
    for (std::size_t i = 0; i < ref.size(); ++i)
        for (std::size_t j = i + 1; j < ref.size(); ++j) {
            if (std::abs(ref[i] - ref[j]) <= ref_tol) continue;
            if ((ref[i] > ref[j]) != (scores[i] > scores[j])) return false;
        }
    return true;
}

inline std::set<int> to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace ecqtest
