#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ecq/bits.hpp"
#include "ecq/graph.hpp"
#include "ecq/matrix.hpp"

namespace ecq {

enum class QuboKind { ec, naive, custom };

struct QuboMeta {
    QuboKind kind = QuboKind::custom;
    int tau = 0;
    double p0 = 0.0;
    double p1 = 0.0;
};

/// Symmetric coefficient matrix of min x'Qx over x in {0,1}^n, together with
/// the parameters it was built from.
class QuboMatrix {
  public:
    QuboMatrix(Matrix q, QuboMeta meta);

    int size() const { return q_.rows(); }
    const Matrix& q() const { return q_; }
    double at(int i, int j) const { return q_(i, j); }
    const QuboMeta& meta() const { return meta_; }

  private:
    Matrix q_;
    QuboMeta meta_;
};

/// Spin-variable form over s in {-1,1}^n: E(s) = sum h_i s_i + sum_{i<j} J_ij s_i s_j,
/// with E_qubo(x) = E_ising(2x - 1) + offset exactly.
struct IsingModel {
    std::vector<double> h;
    std::map<std::pair<int, int>, double> j;  // keys i < j, nonzero couplings only
    double offset = 0.0;

    double energy(const std::vector<int>& spins) const;
};

/// Cardinality matrix C = (1 - 2 tau) I + U with U all-ones off the diagonal;
/// satisfies x'Cx + tau^2 = (sum x_i - tau)^2 on binary x.
Matrix constraint_matrix(int n, int tau);

/// (1/sqrt(n), 5n).
std::pair<double, double> default_penalties(int n);

/// Centrality QUBO: Q = -p0 (M + M') + p1 C with M = (A^2 dhat)(A dhat)'.
/// The two outer-product terms are exactly the -P0 A^2 dhat dhat' A and
/// -P0 A dhat dhat' A^2 contributions, so symmetry is structural. Requires a
/// connected graph with at least one edge, 1 <= tau <= n and p1 > p0 > 0.
QuboMatrix build_ec_qubo(const Graph& g, int tau, double p0, double p1);
QuboMatrix build_ec_qubo(const Graph& g, int tau);  // default penalties

/// Diagnostic objective from squaring the eigenvector equation with the
/// lambda1 -> d_max substitution: Q = A^2 - 2 d_max A + d_max^2 I. Its ground
/// state carries no usable centrality signal; kept to demonstrate exactly that.
QuboMatrix build_naive_qubo(const Graph& g);

/// Wrap an arbitrary symmetric matrix (file import, tests).
QuboMatrix custom_qubo(Matrix q);

/// x'Qx as an exact quadratic form over the symmetric matrix.
double qubo_energy(const QuboMatrix& q, const Bitstring& x);

/// h_i = Q_ii/2 + (1/2) sum_{j != i} Q_ij, J_ij = Q_ij/2 for i < j (the
/// symmetrized coupling Q_ij + Q_ji over 4), offset = (1/4) sum_{i != j} Q_ij
/// + (1/2) sum_i Q_ii.
IsingModel to_ising(const QuboMatrix& q);

}  // namespace ecq
