#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecq/bits.hpp"
#include "ecq/qubo.hpp"

namespace ecq {

struct Sample {
    Bitstring x;
    double energy = 0.0;
    std::uint64_t multiplicity = 1;
};

struct SolverMeta {
    std::string method;
    std::uint64_t reads = 0;
    std::uint64_t sweeps = 0;
    std::uint64_t seed = 0;
    double runtime_ms = 0.0;
    double degeneracy_tol = 1e-9;
    double beta_min = 0.0;  // annealing only
    double beta_max = 0.0;
    bool ground_truncated = false;  // stored ground states hit the cap
};

/// Solver output: samples sorted by energy ascending, ties by ascending
/// bitstring value (node 0 = least significant bit). For the enumeration
/// solvers every ground state is stored individually (multiplicity 1, up to a
/// cap) and each higher diagnostic level is one representative whose
/// multiplicity is the number of states at that level. For the annealing
/// sampler multiplicities count reads, and their total equals `reads`.
struct SampleSet {
    int n = 0;
    std::vector<Sample> samples;
    std::uint64_t ground_count = 0;  // exact number of ground states seen
    SolverMeta meta;

    double ground_energy() const;
    /// Samples within meta.degeneracy_tol of the minimum energy.
    std::vector<const Sample*> ground() const;
    std::uint64_t degeneracy() const { return ground_count; }
};

/// Exact search over all 2^n bitstrings (guarded at n <= 24). Returns every
/// ground state plus the next 10 distinct energy levels for diagnostics.
/// The mask space is partitioned across OpenMP threads, each walking its
/// range in Gray-code order with incremental energy updates; stored energies
/// are recomputed exactly, so the result is independent of the thread count.
SampleSet solve_exhaustive(const QuboMatrix& q, double degeneracy_tol = 1e-9);

/// Exact search restricted to Hamming-weight-tau bitstrings, valid whenever
/// the cardinality penalty holds (guarded at C(n,tau) <= 1e7). Parallel over
/// the smallest selected node.
SampleSet solve_fixed_weight(const QuboMatrix& q, int tau, double degeneracy_tol = 1e-9);

struct SaOptions {
    std::uint64_t reads = 1000;
    std::uint64_t sweeps = 1000;
    std::uint64_t seed = 1;
    /// Inverse-temperature ladder; when unset it is derived from the Ising
    /// form as beta_min = ln 2 / max|dE| and beta_max = ln(100 reads) /
    /// min-nonzero|dE|, with |dE| per spin bounded by 2(|h_i| + sum_j |J_ij|).
    std::optional<std::pair<double, double>> beta_range;
    double degeneracy_tol = 1e-9;
};

/// Seeded simulated annealing standing in for the quantum backends: per read,
/// random spin init from derive_seed(seed, read), then Metropolis single-spin
/// sweeps over a geometric beta ladder; the best state seen in the read is
/// kept. Reads are independent and merged deterministically, so equal
/// (q, reads, sweeps, seed) give identical SampleSets at any thread count.
SampleSet solve_sa(const QuboMatrix& q, const SaOptions& opt);

/// 1-indices of each stored ground bitstring, in sample order.
std::vector<std::vector<int>> ground_nodes(const SampleSet& s);

namespace reference {
/// Serial counterparts kept for testing the parallel kernels. The exhaustive
/// one evaluates x'Qx from scratch per bitstring (no incremental updates).
SampleSet solve_exhaustive(const QuboMatrix& q, double degeneracy_tol = 1e-9);
SampleSet solve_fixed_weight(const QuboMatrix& q, int tau, double degeneracy_tol = 1e-9);
SampleSet solve_sa(const QuboMatrix& q, const SaOptions& opt);
}  // namespace reference

}  // namespace ecq
