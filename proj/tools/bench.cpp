// Compares the serial reference kernels against their OpenMP counterparts:
// the Nash-Williams subset scan, the exhaustive corpus sweep, and the Monte
// Carlo trial loop.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "foliage/forests.hpp"
#include "foliage/generators.hpp"
#include "foliage/report.hpp"

using namespace foliage;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_of(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        Graph g = erdos_renyi(20, 0.5, 7);
        Rational a, b;
        double ts = time_of([&] { a = nash_williams_bound(g); });
        double tp = time_of([&] { b = nash_williams_bound_parallel(g); });
        if (!(a == b)) {
            std::fprintf(stderr, "nash-williams mismatch: %s vs %s\n", a.str().c_str(),
                         b.str().c_str());
            return 1;
        }
        row("nash-williams ER(20, 0.5)", ts, tp);
    }
    {
        Graph g = complete(20);
        Rational a, b;
        double ts = time_of([&] { a = nash_williams_bound(g); });
        double tp = time_of([&] { b = nash_williams_bound_parallel(g); });
        if (!(a == b)) return 1;
        row("nash-williams K20", ts, tp);
    }
    {
        CorpusOptions serial;
        serial.n_max = 5;
        serial.jobs = 1;
        CorpusOptions parallel = serial;
        parallel.jobs = 0;
        CorpusSummary a, b;
        double ts = time_of([&] { a = verify_corpus(serial); });
        double tp = time_of([&] { b = verify_corpus(parallel); });
        if (emit_summary_json(a) != emit_summary_json(b)) {
            std::fprintf(stderr, "corpus summaries differ across job counts\n");
            return 1;
        }
        row("corpus sweep n<=5", ts, tp);
    }
    {
        ErOptions serial{10, 0.5, 400, 99, 1};
        ErOptions parallel{10, 0.5, 400, 99, 0};
        ErStats a, b;
        double ts = time_of([&] { a = er_experiment(serial); });
        double tp = time_of([&] { b = er_experiment(parallel); });
        if (emit_er_json(a) != emit_er_json(b)) {
            std::fprintf(stderr, "er statistics differ across job counts\n");
            return 1;
        }
        row("er experiment n=10, 400 trials", ts, tp);
    }
    return 0;
}
