#include "ecq/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ecq {

QuboMatrix::QuboMatrix(Matrix q, QuboMeta meta) : q_(std::move(q)), meta_(meta) {
    if (q_.rows() != q_.cols()) throw std::invalid_argument("QUBO matrix must be square");
    if (!is_symmetric(q_, 1e-12)) throw std::invalid_argument("QUBO matrix must be symmetric");
}

double IsingModel::energy(const std::vector<int>& spins) const {
    double e = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * spins[i];
    for (const auto& [ij, jij] : j)
        e += jij * spins[static_cast<std::size_t>(ij.first)] *
             spins[static_cast<std::size_t>(ij.second)];
    return e;
}

Matrix constraint_matrix(int n, int tau) {
    if (tau < 1 || tau > n) throw std::invalid_argument("tau out of range [1, n]");
    Matrix c(n, n, 1.0);
    for (int i = 0; i < n; ++i) c(i, i) = 1.0 - 2.0 * tau;
    return c;
}

std::pair<double, double> default_penalties(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    return {1.0 / std::sqrt(static_cast<double>(n)), 5.0 * n};
}

QuboMatrix build_ec_qubo(const Graph& g, int tau, double p0, double p1) {
    const int n = g.node_count();
    if (tau < 1 || tau > n) throw std::invalid_argument("tau out of range [1, n]");
    if (!(p1 > p0 && p0 > 0.0))
        throw std::invalid_argument("penalty ordering violated: need p1 > p0 > 0");
    if (g.edge_count() == 0) throw std::domain_error("centrality QUBO undefined on edgeless graph");
    if (!g.connected()) throw std::domain_error("centrality QUBO requires a connected graph");

    const Matrix a = adjacency(g);
    const std::vector<double> dhat = degrees(g).dhat;
    const std::vector<double> a_dhat = matvec(a, dhat);
    const std::vector<double> a2_dhat = matvec(a, a_dhat);

    // M = (A^2 dhat)(A dhat)'; Q = -p0 (M + M') + p1 C.
    Matrix q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q(i, j) = -p0 * (a2_dhat[static_cast<std::size_t>(i)] * a_dhat[static_cast<std::size_t>(j)] +
                             a_dhat[static_cast<std::size_t>(i)] * a2_dhat[static_cast<std::size_t>(j)]);
    const double off = p1;
    const double diag = p1 * (1.0 - 2.0 * tau);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q(i, j) += (i == j) ? diag : off;

    return QuboMatrix(std::move(q), QuboMeta{QuboKind::ec, tau, p0, p1});
}

QuboMatrix build_ec_qubo(const Graph& g, int tau) {
    auto [p0, p1] = default_penalties(g.node_count());
    return build_ec_qubo(g, tau, p0, p1);
}

QuboMatrix build_naive_qubo(const Graph& g) {
    if (!g.connected()) throw std::domain_error("naive QUBO requires a connected graph");
    const int n = g.node_count();
    const Matrix a = adjacency(g);
    double dmax = 0.0;
    for (int v = 0; v < n; ++v) dmax = std::max(dmax, static_cast<double>(g.degree(v)));
    // (Ax - lambda1 x)^2 with lambda1 replaced by d_max; the substitution error
    // term is dropped.
    Matrix q = matmul(a, a);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            q(i, j) -= 2.0 * dmax * a(i, j);
            if (i == j) q(i, j) += dmax * dmax;
        }
    return QuboMatrix(std::move(q), QuboMeta{QuboKind::naive, 0, 0.0, 0.0});
}

QuboMatrix custom_qubo(Matrix q) { return QuboMatrix(std::move(q), QuboMeta{}); }

double qubo_energy(const QuboMatrix& q, const Bitstring& x) {
    const int n = q.size();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("bitstring length does not match QUBO size");
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!x[static_cast<std::size_t>(i)]) continue;
        const double* row = q.q().row(i);
        e += row[i];
        for (int j = i + 1; j < n; ++j)
            if (x[static_cast<std::size_t>(j)]) e += 2.0 * row[j];
    }
    return e;
}

IsingModel to_ising(const QuboMatrix& q) {
    const int n = q.size();
    IsingModel m;
    m.h.resize(static_cast<std::size_t>(n));
    double off_sum = 0.0, diag_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double v = q.at(i, j);
            rowsum += v;
            off_sum += v;
            if (i < j && v != 0.0) m.j[{i, j}] = v / 2.0;
        }
        diag_sum += q.at(i, i);
        m.h[static_cast<std::size_t>(i)] = q.at(i, i) / 2.0 + rowsum / 2.0;
    }
    m.offset = off_sum / 4.0 + diag_sum / 2.0;
    return m;
}

}  // namespace ecq
