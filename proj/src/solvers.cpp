#include "ecq/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ecq/error.hpp"
#include "ecq/rng.hpp"

namespace ecq {

namespace {

constexpr int kMaxExhaustiveBits = 24;
constexpr std::uint64_t kMaxCombinations = 10'000'000;
constexpr int kMaxLevels = 11;  // ground + 10 diagnostic levels
constexpr std::size_t kGroundCap = 1 << 17;
constexpr std::uint64_t kReanchorPeriod = 1 << 16;
constexpr double kDriftGuard = 1e-6;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

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

double energy_of_mask(const QuboMatrix& q, std::uint64_t mask) {
    double e = 0.0;
    for (std::uint64_t rest = mask; rest;) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        const double* row = q.q().row(i);
        e += row[i];
        for (std::uint64_t rest2 = rest; rest2;) {
            const int j = std::countr_zero(rest2);
            rest2 &= rest2 - 1;
            e += 2.0 * row[j];
        }
    }
    return e;
}

/// Lowest kMaxLevels distinct energy levels (distinct = separated by more
/// than tol; spectra here have gaps far above it). Ground-level states are
/// stored individually up to the cap, higher levels keep one representative
/// (the lowest state value) plus an exact count. Pruning only ever drops the
/// worst level, so anything reported is globally exact.
template <typename State, typename Less>
struct LevelTracker {
    explicit LevelTracker(double tol_) : tol(tol_) {}

    struct Level {
        double energy;
        State rep;
        std::uint64_t count;
    };

    double tol;
    std::vector<Level> levels;  // ascending energy
    std::vector<State> ground;  // states at levels[0]
    bool truncated = false;

    double admit_bound() const {
        return levels.size() < kMaxLevels ? std::numeric_limits<double>::infinity()
                                          : levels.back().energy + tol;
    }

    void add(double e, const State& s, std::uint64_t count = 1) {
        Less less;
        for (std::size_t k = 0; k < levels.size(); ++k) {
            if (e > levels[k].energy + tol) continue;
            if (e >= levels[k].energy - tol) {  // joins level k
                levels[k].count += count;
                if (e < levels[k].energy) levels[k].energy = e;
                if (less(s, levels[k].rep)) levels[k].rep = s;
                if (k == 0) push_ground(s);
                return;
            }
            // strictly below level k: insert a new level there
            levels.insert(levels.begin() + static_cast<std::ptrdiff_t>(k), Level{e, s, count});
            if (k == 0) {
                ground.clear();
                truncated = false;
                push_ground(s);
            }
            if (levels.size() > kMaxLevels) levels.pop_back();
            return;
        }
        if (levels.size() < kMaxLevels) {
            levels.push_back(Level{e, s, count});
            if (levels.size() == 1) push_ground(s);
        }
    }

    void push_ground(const State& s) {
        if (ground.size() < kGroundCap)
            ground.push_back(s);
        else
            truncated = true;
    }

    /// Fold `other` in: counts are additive, ground lists concatenate when the
    /// ground levels coincide.
    void merge(const LevelTracker& other) {
        for (std::size_t k = 0; k < other.levels.size(); ++k) {
            const auto& lv = other.levels[k];
            if (k > 0) {
                add(lv.energy, lv.rep, lv.count);
                continue;
            }
            // Other's ground level carries a full state list, so splice it
            // rather than registering just the representative.
            Less less;
            if (levels.empty() || lv.energy < levels.front().energy - tol) {
                levels.insert(levels.begin(), lv);
                if (levels.size() > kMaxLevels) levels.pop_back();
                ground = other.ground;
                truncated = other.truncated;
            } else if (lv.energy <= levels.front().energy + tol) {
                auto& front = levels.front();
                front.count += lv.count;
                if (lv.energy < front.energy) front.energy = lv.energy;
                if (less(lv.rep, front.rep)) front.rep = lv.rep;
                for (const auto& s : other.ground) push_ground(s);
                truncated = truncated || other.truncated;
            } else {
                add(lv.energy, lv.rep, lv.count);
            }
        }
    }
};

struct MaskLess {
    bool operator()(std::uint64_t a, std::uint64_t b) const { return a < b; }
};

/// Ascending-bitstring order for node-index combinations: compare the largest
/// differing element (equivalent to the numeric mask value).
struct ComboLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        std::size_t ia = a.size(), ib = b.size();
        while (ia > 0 && ib > 0) {
            if (a[ia - 1] != b[ib - 1]) return a[ia - 1] < b[ib - 1];
            --ia, --ib;
        }
        return ia < ib;
    }
};

using MaskTracker = LevelTracker<std::uint64_t, MaskLess>;
using ComboTracker = LevelTracker<std::vector<int>, ComboLess>;

/// Walk masks lo..hi-1 in Gray-code order with O(n) incremental energy
/// updates; candidates below the admission bound get an exact recompute
/// before entering the tracker.
void exhaustive_range(const QuboMatrix& q, std::uint64_t lo, std::uint64_t hi, MaskTracker& tr) {
    const int n = q.size();
    auto gray = [](std::uint64_t m) { return m ^ (m >> 1); };

    std::vector<double> act(static_cast<std::size_t>(n));  // act[j] = sum_{i in state} Q_ij
    std::uint64_t state = gray(lo);
    auto anchor = [&] {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            const double* row = q.q().row(j);
            for (std::uint64_t rest = state; rest;) {
                const int i = std::countr_zero(rest);
                rest &= rest - 1;
                s += row[i];
            }
            act[static_cast<std::size_t>(j)] = s;
        }
    };
    anchor();
    double e = energy_of_mask(q, state);

    for (std::uint64_t m = lo; m < hi; ++m) {
        if (e <= tr.admit_bound() + kDriftGuard) tr.add(energy_of_mask(q, state), state);
        if (m + 1 >= hi) break;
        const int b = std::countr_zero(m + 1);
        const double* row = q.q().row(b);
        const auto bk = static_cast<std::size_t>(b);
        if (state & (1ULL << b)) {
            e += row[b] - 2.0 * act[bk];
            state &= ~(1ULL << b);
            for (int j = 0; j < n; ++j) act[static_cast<std::size_t>(j)] -= row[j];
        } else {
            e += row[b] + 2.0 * act[bk];
            state |= 1ULL << b;
            for (int j = 0; j < n; ++j) act[static_cast<std::size_t>(j)] += row[j];
        }
        if (((m + 1) & (kReanchorPeriod - 1)) == 0) {
            anchor();
            e = energy_of_mask(q, state);
        }
    }
}

SampleSet package_masks(const QuboMatrix& q, MaskTracker& tr, SolverMeta meta) {
    SampleSet out;
    out.n = q.size();
    std::sort(tr.ground.begin(), tr.ground.end());
    for (std::uint64_t mask : tr.ground) {
        Bitstring b = bits_from_mask(mask, q.size());
        out.samples.push_back(Sample{b, qubo_energy(q, b), 1});
    }
    for (std::size_t k = 1; k < tr.levels.size(); ++k) {
        Bitstring b = bits_from_mask(tr.levels[k].rep, q.size());
        out.samples.push_back(Sample{b, qubo_energy(q, b), tr.levels[k].count});
    }
    out.ground_count = tr.levels.empty() ? 0 : tr.levels.front().count;
    meta.ground_truncated = tr.truncated;
    out.meta = std::move(meta);
    return out;
}

void check_exhaustive_size(int n) {
    if (n > kMaxExhaustiveBits)
        throw CapacityError("exhaustive enumeration limited to n <= " +
                            std::to_string(kMaxExhaustiveBits) + " (got n = " +
                            std::to_string(n) + ")");
}

double combo_energy(const QuboMatrix& q, const std::vector<int>& c) {
    double e = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double* row = q.q().row(c[k]);
        e += row[c[k]];
        for (std::size_t l = k + 1; l < c.size(); ++l) e += 2.0 * row[c[l]];
    }
    return e;
}

/// All weight-tau combinations whose smallest element is `first`.
void fixed_weight_block(const QuboMatrix& q, int tau, int first, ComboTracker& tr) {
    const int n = q.size();
    std::vector<int> c(static_cast<std::size_t>(tau));
    for (int k = 0; k < tau; ++k) c[static_cast<std::size_t>(k)] = first + k;
    if (c.back() >= n) return;
    while (true) {
        const double e = combo_energy(q, c);
        if (e <= tr.admit_bound()) tr.add(e, c);
        int i = tau - 1;
        while (i >= 1 && c[static_cast<std::size_t>(i)] == n - tau + i) --i;
        if (i == 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < tau; ++k)
            c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] + 1;
    }
}

SampleSet package_combos(const QuboMatrix& q, ComboTracker& tr, SolverMeta meta) {
    SampleSet out;
    out.n = q.size();
    std::sort(tr.ground.begin(), tr.ground.end(), ComboLess{});
    for (const auto& c : tr.ground) {
        Bitstring b = bits_from_nodes(c, q.size());
        out.samples.push_back(Sample{b, qubo_energy(q, b), 1});
    }
    for (std::size_t k = 1; k < tr.levels.size(); ++k) {
        Bitstring b = bits_from_nodes(tr.levels[k].rep, q.size());
        out.samples.push_back(Sample{b, qubo_energy(q, b), tr.levels[k].count});
    }
    out.ground_count = tr.levels.empty() ? 0 : tr.levels.front().count;
    meta.ground_truncated = tr.truncated;
    out.meta = std::move(meta);
    return out;
}

void check_fixed_weight_size(int n, int tau) {
    if (tau < 1 || tau > n) throw std::invalid_argument("tau out of range [1, n]");
    if (binomial_capped(n, tau, kMaxCombinations) > kMaxCombinations)
        throw CapacityError("C(n, tau) exceeds the fixed-weight enumeration cap of 1e7");
}

// ---------------------------------------------------------------------------
// Simulated annealing
// ---------------------------------------------------------------------------

struct SaPlan {
    int n;
    std::vector<double> h;
    std::vector<double> jrow;  // dense n x n symmetric couplings, zero diagonal
    double offset;
    std::vector<double> betas;
    double beta_min, beta_max;
};

SaPlan make_plan(const QuboMatrix& q, const SaOptions& opt) {
    SaPlan p;
    p.n = q.size();
    IsingModel m = to_ising(q);
    p.h = m.h;
    p.offset = m.offset;
    p.jrow.assign(static_cast<std::size_t>(p.n) * static_cast<std::size_t>(p.n), 0.0);
    for (const auto& [ij, v] : m.j) {
        p.jrow[static_cast<std::size_t>(ij.first) * p.n + ij.second] = v;
        p.jrow[static_cast<std::size_t>(ij.second) * p.n + ij.first] = v;
    }

    if (opt.beta_range) {
        p.beta_min = opt.beta_range->first;
        p.beta_max = opt.beta_range->second;
    } else {
        // |dE| for one spin flip is bounded by 2(|h_i| + sum_j |J_ij|).
        double rmax = 0.0;
        double rmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < p.n; ++i) {
            double r = std::abs(p.h[static_cast<std::size_t>(i)]);
            for (int j = 0; j < p.n; ++j)
                r += std::abs(p.jrow[static_cast<std::size_t>(i) * p.n + j]);
            rmax = std::max(rmax, r);
            if (r > 0.0) rmin = std::min(rmin, r);
        }
        if (rmax == 0.0) {
            p.beta_min = p.beta_max = 1.0;  // flat energy landscape
        } else {
            p.beta_min = std::log(2.0) / (2.0 * rmax);
            p.beta_max = std::log(100.0 * static_cast<double>(opt.reads)) / (2.0 * rmin);
        }
    }
    const auto sweeps = static_cast<std::size_t>(opt.sweeps);
    p.betas.resize(sweeps);
    if (sweeps == 1) {
        p.betas[0] = p.beta_min;
    } else {
        const double ratio = p.beta_max / p.beta_min;
        for (std::size_t t = 0; t < sweeps; ++t)
            p.betas[t] = p.beta_min *
                         std::pow(ratio, static_cast<double>(t) / static_cast<double>(sweeps - 1));
    }
    return p;
}

/// One annealing read: random init, Metropolis single-spin sweeps up the beta
/// ladder, best-seen state returned. A uniform variate is drawn on every
/// attempt so the draw sequence does not depend on the acceptance pattern.
std::pair<Bitstring, double> sa_read(const SaPlan& p, std::uint64_t read_seed) {
    const int n = p.n;
    Rng rng(read_seed);
    std::vector<int> s(static_cast<std::size_t>(n));
    for (auto& v : s) v = rng.uniform() < 0.5 ? 1 : -1;

    std::vector<double> field(static_cast<std::size_t>(n));  // h_i + sum_j J_ij s_j
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
        double f = p.h[static_cast<std::size_t>(i)];
        const double* row = &p.jrow[static_cast<std::size_t>(i) * n];
        for (int j = 0; j < n; ++j) f += row[j] * s[static_cast<std::size_t>(j)];
        field[static_cast<std::size_t>(i)] = f;
        e += s[static_cast<std::size_t>(i)] *
             (p.h[static_cast<std::size_t>(i)] + (f - p.h[static_cast<std::size_t>(i)]) * 0.5);
    }

    std::vector<int> best = s;
    double best_e = e;
    for (double beta : p.betas) {
        for (int i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            const double de = -2.0 * s[k] * field[k];
            const double u = rng.uniform();
            if (de <= 0.0 || u < std::exp(-beta * de)) {
                s[k] = -s[k];
                e += de;
                const double step = 2.0 * s[k];
                const double* row = &p.jrow[k * static_cast<std::size_t>(n)];
                for (int j = 0; j < n; ++j) field[static_cast<std::size_t>(j)] += step * row[j];
                if (e < best_e) {
                    best_e = e;
                    best = s;
                }
            }
        }
    }

    Bitstring bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = best[static_cast<std::size_t>(i)] > 0;
    return {std::move(bits), best_e + p.offset};
}

SampleSet aggregate_reads(const QuboMatrix& q, std::vector<std::pair<Bitstring, double>> reads,
                          SolverMeta meta) {
    std::map<Bitstring, std::uint64_t, decltype([](const Bitstring& a, const Bitstring& b) {
                 return bits_value_less(a, b);
             })>
        counts;
    for (auto& [bits, e] : reads) counts[bits] += 1;

    SampleSet out;
    out.n = q.size();
    for (const auto& [bits, count] : counts)
        out.samples.push_back(Sample{bits, qubo_energy(q, bits), count});
    std::stable_sort(out.samples.begin(), out.samples.end(), [](const Sample& a, const Sample& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return bits_value_less(a.x, b.x);
    });
    const double tol = meta.degeneracy_tol;
    if (!out.samples.empty()) {
        const double gmin = out.samples.front().energy;
        for (const auto& smp : out.samples)
            if (smp.energy <= gmin + tol) ++out.ground_count;
    }
    out.meta = std::move(meta);
    return out;
}

}  // namespace

double SampleSet::ground_energy() const {
    if (samples.empty()) throw std::logic_error("empty sample set");
    return samples.front().energy;
}

std::vector<const Sample*> SampleSet::ground() const {
    std::vector<const Sample*> out;
    if (samples.empty()) return out;
    const double gmin = ground_energy();
    for (const auto& s : samples)
        if (s.energy <= gmin + meta.degeneracy_tol) out.push_back(&s);
    return out;
}

SampleSet solve_exhaustive(const QuboMatrix& q, double degeneracy_tol) {
    check_exhaustive_size(q.size());
    const double t0 = now_ms();
    const std::uint64_t total = 1ULL << q.size();

#ifdef _OPENMP
    const std::uint64_t want = std::max<std::uint64_t>(total >> 12, 1);  // keep chunks sizeable
    const int threads = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(omp_get_max_threads()), want));
#else
    const int threads = 1;
#endif
    std::vector<MaskTracker> locals(static_cast<std::size_t>(threads), MaskTracker(degeneracy_tol));
    const std::uint64_t chunk = (total + threads - 1) / threads;
#pragma omp parallel for num_threads(threads) schedule(static, 1)
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo < hi) exhaustive_range(q, lo, hi, locals[static_cast<std::size_t>(t)]);
    }
    MaskTracker merged(degeneracy_tol);
    for (auto& tr : locals) merged.merge(tr);

    SolverMeta meta;
    meta.method = "exhaustive";
    meta.degeneracy_tol = degeneracy_tol;
    SampleSet out = package_masks(q, merged, std::move(meta));
    out.meta.runtime_ms = now_ms() - t0;
    return out;
}

SampleSet solve_fixed_weight(const QuboMatrix& q, int tau, double degeneracy_tol) {
    check_fixed_weight_size(q.size(), tau);
    const double t0 = now_ms();
    const int n = q.size();
    const int blocks = n - tau + 1;
    std::vector<ComboTracker> locals(static_cast<std::size_t>(blocks),
                                     ComboTracker(degeneracy_tol));
#pragma omp parallel for schedule(dynamic)
    for (int f = 0; f < blocks; ++f)
        fixed_weight_block(q, tau, f, locals[static_cast<std::size_t>(f)]);

    ComboTracker merged(degeneracy_tol);
    for (auto& tr : locals) merged.merge(tr);

    SolverMeta meta;
    meta.method = "fixed-weight";
    meta.degeneracy_tol = degeneracy_tol;
    SampleSet out = package_combos(q, merged, std::move(meta));
    out.meta.runtime_ms = now_ms() - t0;
    return out;
}

SampleSet solve_sa(const QuboMatrix& q, const SaOptions& opt) {
    if (opt.reads < 1 || opt.sweeps < 1)
        throw std::invalid_argument("solve_sa requires reads >= 1 and sweeps >= 1");
    const double t0 = now_ms();
    const SaPlan plan = make_plan(q, opt);
    std::vector<std::pair<Bitstring, double>> reads(static_cast<std::size_t>(opt.reads));
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(opt.reads); ++k)
        reads[static_cast<std::size_t>(k)] =
            sa_read(plan, derive_seed(opt.seed, static_cast<std::uint64_t>(k)));

    SolverMeta meta;
    meta.method = "sa";
    meta.reads = opt.reads;
    meta.sweeps = opt.sweeps;
    meta.seed = opt.seed;
    meta.degeneracy_tol = opt.degeneracy_tol;
    meta.beta_min = plan.beta_min;
    meta.beta_max = plan.beta_max;
    SampleSet out = aggregate_reads(q, std::move(reads), std::move(meta));
    out.meta.runtime_ms = now_ms() - t0;
    return out;
}

std::vector<std::vector<int>> ground_nodes(const SampleSet& s) {
    if (s.samples.empty()) throw std::invalid_argument("ground_nodes on empty sample set");
    std::vector<std::vector<int>> out;
    for (const Sample* smp : s.ground()) out.push_back(ones_of(smp->x));
    return out;
}

namespace reference {

SampleSet solve_exhaustive(const QuboMatrix& q, double degeneracy_tol) {
    check_exhaustive_size(q.size());
    const double t0 = now_ms();
    const std::uint64_t total = 1ULL << q.size();
    MaskTracker tr(degeneracy_tol);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Bitstring b = bits_from_mask(mask, q.size());
        tr.add(qubo_energy(q, b), mask);
    }
    SolverMeta meta;
    meta.method = "exhaustive-serial";
    meta.degeneracy_tol = degeneracy_tol;
    SampleSet out = package_masks(q, tr, std::move(meta));
    out.meta.runtime_ms = now_ms() - t0;
    return out;
}

SampleSet solve_fixed_weight(const QuboMatrix& q, int tau, double degeneracy_tol) {
    check_fixed_weight_size(q.size(), tau);
    const double t0 = now_ms();
    ComboTracker tr(degeneracy_tol);
    for (int f = 0; f + tau <= q.size(); ++f) fixed_weight_block(q, tau, f, tr);
    SolverMeta meta;
    meta.method = "fixed-weight-serial";
    meta.degeneracy_tol = degeneracy_tol;
    SampleSet out = package_combos(q, tr, std::move(meta));
    out.meta.runtime_ms = now_ms() - t0;
    return out;
}

SampleSet solve_sa(const QuboMatrix& q, const SaOptions& opt) {
    if (opt.reads < 1 || opt.sweeps < 1)
        throw std::invalid_argument("solve_sa requires reads >= 1 and sweeps >= 1");
    const double t0 = now_ms();
    const SaPlan plan = make_plan(q, opt);
    std::vector<std::pair<Bitstring, double>> reads;
    reads.reserve(static_cast<std::size_t>(opt.reads));
    for (std::uint64_t k = 0; k < opt.reads; ++k)
        reads.push_back(sa_read(plan, derive_seed(opt.seed, k)));
    SolverMeta meta;
    meta.method = "sa-serial";
    meta.reads = opt.reads;
    meta.sweeps = opt.sweeps;
    meta.seed = opt.seed;
    meta.degeneracy_tol = opt.degeneracy_tol;
    meta.beta_min = plan.beta_min;
    meta.beta_max = plan.beta_max;
    SampleSet out = aggregate_reads(q, std::move(reads), std::move(meta));
    out.meta.runtime_ms = now_ms() - t0;
    return out;
}

}  // namespace reference

}  // namespace ecq
