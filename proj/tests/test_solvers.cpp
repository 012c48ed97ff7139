#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ecq/error.hpp"
#include "ecq/graph.hpp"
#include "ecq/qubo.hpp"
#include "ecq/solvers.hpp"
#include "support.hpp"

using namespace ecq;

namespace {

void check_sampleset_wellformed(const QuboMatrix& q, const SampleSet& s) {
    REQUIRE_FALSE(s.samples.empty());
    for (std::size_t i = 0; i + 1 < s.samples.size(); ++i)
        CHECK(s.samples[i].energy <= s.samples[i + 1].energy + s.meta.degeneracy_tol);
    for (const auto& smp : s.samples) {
        CHECK(smp.multiplicity >= 1);
        CHECK(std::abs(smp.energy - qubo_energy(q, smp.x)) < 1e-9);
    }
}

std::set<std::set<int>> ground_sets_of(const SampleSet& s) {
    std::set<std::set<int>> out;
    for (const auto& nodes : ground_nodes(s)) out.insert({nodes.begin(), nodes.end()});
    return out;
}

bool same_result(const SampleSet& a, const SampleSet& b) {
    if (a.samples.size() != b.samples.size()) return false;
    if (a.ground_count != b.ground_count) return false;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        if (a.samples[i].x != b.samples[i].x) return false;
        if (a.samples[i].multiplicity != b.samples[i].multiplicity) return false;
        if (a.samples[i].energy != b.samples[i].energy) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("solvers");

TEST_CASE("exhaustive finds the unique path(3) ground state") {
    QuboMatrix q = build_ec_qubo(builtin("path", {3}), 1);
    SampleSet s = solve_exhaustive(q);
    check_sampleset_wellformed(q, s);
    CHECK(s.degeneracy() == 1);
    CHECK(s.samples.front().x == Bitstring{0, 1, 0});
    CHECK(s.ground_energy() == doctest::Approx(-8.0 / (3.0 * std::sqrt(3.0)) - 15.0));
    // the 2^3 spectrum has 6 distinct levels: the ground plus 5 diagnostics
    CHECK(s.samples.size() == 6);
}

TEST_CASE("exhaustive reports degenerate ground states") {
    // complete(5) at tau=1 relaxes to the weight-2 pairs; fixed-weight keeps
    // the tau slice with its 5-fold degeneracy.
    QuboMatrix q = build_ec_qubo(builtin("complete", {5}), 1);
    SampleSet s = solve_exhaustive(q);
    CHECK(s.degeneracy() == 10);

    SampleSet fw = solve_fixed_weight(q, 1);
    CHECK(fw.degeneracy() == 5);
    CHECK(ground_sets_of(fw) == std::set<std::set<int>>{{0}, {1}, {2}, {3}, {4}});
}

TEST_CASE("spider graph tau=5: twelve degenerate ground states") {
    QuboMatrix q = build_ec_qubo(builtin("g8_spider"), 5);
    SampleSet s = solve_exhaustive(q);
    check_sampleset_wellformed(q, s);
    CHECK(s.degeneracy() == 12);
    auto sets = ground_sets_of(s);
    CHECK(sets.size() == 12);
    for (const auto& set : sets) {
        CHECK(set.size() == 5);
        for (int hub : {0, 1, 2, 3}) CHECK(set.count(hub) == 1);
    }
}

TEST_CASE("exhaustive guards against blowup") {
    Matrix big(25, 25);
    CHECK_THROWS_AS(solve_exhaustive(custom_qubo(big)), CapacityError);
}

TEST_CASE("exhaustive matches the serial reference and the direct oracle") {
    for (const auto& [name, g] : ecqtest::connected_roster_upto(16)) {
        CAPTURE(name);
        for (int tau : {1, std::min(5, g.node_count())}) {
            QuboMatrix q = build_ec_qubo(g, tau);
            SampleSet par = solve_exhaustive(q);
            SampleSet ser = reference::solve_exhaustive(q);
            CHECK(same_result(par, ser));
            auto [oracle_e, oracle_masks] = ecqtest::oracle_ground(q.q());
            CHECK(par.ground_energy() == doctest::Approx(oracle_e).epsilon(1e-12));
            CHECK(ground_sets_of(par) == ecqtest::mask_node_sets(oracle_masks));
        }
    }
}

TEST_CASE("exhaustive diagnostic levels match the oracle spectrum") {
    QuboMatrix q = build_ec_qubo(builtin("sedgewick_maze"), 2);
    SampleSet s = solve_exhaustive(q);
    // collect the distinct spectrum by brute force
    std::vector<double> spectrum;
    for (std::uint64_t m = 0; m < 256; ++m) spectrum.push_back(ecqtest::oracle_energy(q.q(), m));
    std::sort(spectrum.begin(), spectrum.end());
    std::vector<std::pair<double, int>> levels;  // energy, count
    for (double e : spectrum) {
        if (levels.empty() || e > levels.back().first + 1e-9)
            levels.push_back({e, 1});
        else
            levels.back().second += 1;
    }
    const std::size_t expect = std::min<std::size_t>(levels.size(), 11);
    // samples: ground states individually, then one representative per level
    REQUIRE(s.degeneracy() == static_cast<std::uint64_t>(levels[0].second));
    std::size_t idx = s.degeneracy();
    for (std::size_t l = 1; l < expect; ++l, ++idx) {
        REQUIRE(idx < s.samples.size());
        CHECK(s.samples[idx].energy == doctest::Approx(levels[l].first).epsilon(1e-12));
        CHECK(s.samples[idx].multiplicity == static_cast<std::uint64_t>(levels[l].second));
    }
    CHECK(idx == s.samples.size());
}

TEST_CASE("fixed-weight equals exhaustive whenever the free minimum has weight tau") {
    for (const auto& [name, g] : ecqtest::connected_roster_upto(20)) {
        CAPTURE(name);
        for (int tau = 1; tau <= std::min(6, g.node_count()); ++tau) {
            QuboMatrix q = build_ec_qubo(g, tau);
            SampleSet fw = solve_fixed_weight(q, tau);
            SampleSet ex = solve_exhaustive(q);
            CHECK(fw.ground_energy() >= ex.ground_energy() - 1e-9);
            bool free_min_at_tau = true;
            for (const auto& nodes : ground_nodes(ex))
                free_min_at_tau = free_min_at_tau && static_cast<int>(nodes.size()) == tau;
            if (free_min_at_tau) {
                CHECK(fw.ground_energy() == doctest::Approx(ex.ground_energy()).epsilon(1e-12));
                CHECK(ground_sets_of(fw) == ground_sets_of(ex));
            }
        }
    }
}

TEST_CASE("fixed-weight matches its serial reference and the sliced oracle") {
    for (const auto& [name, g] : ecqtest::connected_roster_upto(16)) {
        CAPTURE(name);
        const int tau = std::min(5, g.node_count());
        QuboMatrix q = build_ec_qubo(g, tau);
        SampleSet par = solve_fixed_weight(q, tau);
        SampleSet ser = reference::solve_fixed_weight(q, tau);
        CHECK(same_result(par, ser));
        auto [oracle_e, oracle_masks] = ecqtest::oracle_ground_weight(q.q(), tau);
        CHECK(par.ground_energy() == doctest::Approx(oracle_e).epsilon(1e-12));
        CHECK(ground_sets_of(par) == ecqtest::mask_node_sets(oracle_masks));
    }
}

TEST_CASE("fixed-weight golden results on the karate club") {
    Graph g = builtin("karate_club");
    SampleSet one = solve_fixed_weight(build_ec_qubo(g, 1), 1);
    CHECK(ground_sets_of(one) == std::set<std::set<int>>{{33}});
    SampleSet five = solve_fixed_weight(build_ec_qubo(g, 5), 5);
    CHECK(ground_sets_of(five) == std::set<std::set<int>>{{0, 1, 2, 32, 33}});
}

TEST_CASE("fixed-weight capacity guard") {
    Matrix big(64, 64);
    CHECK_THROWS_AS(solve_fixed_weight(custom_qubo(big), 32), CapacityError);
    QuboMatrix q = build_ec_qubo(builtin("bull"), 1);
    CHECK_THROWS_AS(solve_fixed_weight(q, 0), std::invalid_argument);
    CHECK_THROWS_AS(solve_fixed_weight(q, 6), std::invalid_argument);
}

TEST_CASE("annealer hits the exact minimum on the spider graph") {
    QuboMatrix q = build_ec_qubo(builtin("g8_spider"), 1);
    SaOptions opt;
    opt.reads = 1000;
    opt.seed = 7;
    SampleSet s = solve_sa(q, opt);
    check_sampleset_wellformed(q, s);
    SampleSet exact = solve_exhaustive(q);
    CHECK(s.ground_energy() == doctest::Approx(exact.ground_energy()).epsilon(1e-9));
    CHECK(ground_nodes(s).front() == std::vector<int>{0});
    std::uint64_t total = 0;
    for (const auto& smp : s.samples) total += smp.multiplicity;
    CHECK(total == opt.reads);
}

TEST_CASE("annealer samples several degenerate ground states of complete(5)") {
    QuboMatrix q = build_ec_qubo(builtin("complete", {5}), 1);
    SaOptions opt;
    opt.reads = 1000;
    opt.seed = 3;
    SampleSet s = solve_sa(q, opt);
    CHECK(s.degeneracy() >= 2);
}

TEST_CASE("annealer on the zero matrix returns zero energies") {
    SaOptions opt;
    opt.reads = 50;
    opt.sweeps = 10;
    opt.seed = 1;
    SampleSet s = solve_sa(custom_qubo(Matrix(6, 6)), opt);
    for (const auto& smp : s.samples) CHECK(smp.energy == 0.0);
}

TEST_CASE("annealer is deterministic across runs and thread counts") {
    QuboMatrix q = build_ec_qubo(builtin("sedgewick_maze"), 3);
    SaOptions opt;
    opt.reads = 200;
    opt.sweeps = 100;
    opt.seed = 42;
    SampleSet serial = reference::solve_sa(q, opt);
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    SampleSet one = solve_sa(q, opt);
    omp_set_num_threads(saved > 1 ? saved : 4);
    SampleSet many = solve_sa(q, opt);
    omp_set_num_threads(saved);
    CHECK(same_result(one, many));
    CHECK(same_result(one, serial));
#else
    SampleSet again = solve_sa(q, opt);
    CHECK(same_result(serial, again));
#endif
}

TEST_CASE("annealer rejects degenerate options") {
    QuboMatrix q = build_ec_qubo(builtin("bull"), 1);
    SaOptions opt;
    opt.reads = 0;
    CHECK_THROWS_AS(solve_sa(q, opt), std::invalid_argument);
}

TEST_CASE("ground_nodes ordering and errors") {
    QuboMatrix q = build_ec_qubo(builtin("bull"), 1);
    SampleSet s = solve_exhaustive(q);
    auto sets = ground_nodes(s);
    REQUIRE(sets.size() == 2);  // nodes 1 and 2 tie by symmetry
    CHECK(sets[0] == std::vector<int>{1});
    CHECK(sets[1] == std::vector<int>{2});

    SampleSet empty;
    CHECK_THROWS_AS(ground_nodes(empty), std::invalid_argument);
}

TEST_SUITE_END();
