// Timing comparison of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ecq/graph.hpp"
#include "ecq/matrix.hpp"
#include "ecq/qubo.hpp"
#include "ecq/solvers.hpp"

using namespace ecq;

namespace {

double time_ms(const std::function<void()>& fn, int repeats = 3) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock::now();
        fn();
        const auto t1 = clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        Graph g = builtin("barabasi_albert", {22, 3}, 1);
        QuboMatrix q = build_ec_qubo(g, 3);
        const double s = time_ms([&] { reference::solve_exhaustive(q); }, 1);
        const double p = time_ms([&] { solve_exhaustive(q); });
        row("exhaustive 2^22 states", s, p);
    }
    {
        Graph g = builtin("barabasi_albert", {44, 4}, 2);
        QuboMatrix q = build_ec_qubo(g, 5);  // C(44,5) = 1086008 combinations
        const double s = time_ms([&] { reference::solve_fixed_weight(q, 5); });
        const double p = time_ms([&] { solve_fixed_weight(q, 5); });
        row("fixed-weight C(44,5) states", s, p);
    }
    {
        QuboMatrix q = build_ec_qubo(builtin("karate_club"), 5);
        SaOptions opt;
        opt.reads = 2000;
        opt.sweeps = 500;
        opt.seed = 1;
        const double s = time_ms([&] { reference::solve_sa(q, opt); });
        const double p = time_ms([&] { solve_sa(q, opt); });
        row("annealer 2000 reads x 500 sweeps", s, p);
    }
    {
        Graph g = builtin("barabasi_albert", {300, 5}, 3);
        Matrix a = adjacency(g);
        const double s = time_ms([&] { reference::matmul(a, a); });
        const double p = time_ms([&] { matmul(a, a); });
        row("dense matmul 300x300", s, p);
    }
    return 0;
}
