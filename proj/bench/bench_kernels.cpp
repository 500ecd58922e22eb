// serial vs OpenMP timings for the three parallel kernels
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "hornsing/linalg.hpp"
#include "hornsing/registry.hpp"

using namespace hornsing;

namespace {

template <class F>
double seconds(F f, int reps = 3) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        auto a = std::chrono::steady_clock::now();
        f();
        auto b = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(b - a).count());
    }
    return best;
}

void report(const char* what, double s, double p) {
    std::printf("%-28s serial %8.4fs  parallel %8.4fs  x%.2f\n", what, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 60;
    std::printf("threads: %d\n", omp_get_max_threads());

    std::mt19937 g(20240611);
    std::uniform_int_distribution<int> d(-50, 50);
    RMatrix a(n, RVector(n + 5));
    for (auto& row : a)
        for (auto& x : row) x = Rational(d(g), 1 + std::abs(d(g)));
    report("echelon", seconds([&] { echelon_serial(a, n + 5); }), seconds([&] { echelon_parallel(a, n + 5); }));

    SeriesSource s = series_source(registry_spec("asym", true));
    report("formula expansion (N=24)", seconds([&] { expand_from_formula_serial(s.formula, s.idx, s.params, 24); }),
           seconds([&] { expand_from_formula(s.formula, s.idx, s.params, 24); }));

    BiSeries b = expand(series_source(registry_spec("h2")), 40);
    RatFun xp = parse_ratfun("t^2", {"t"}), yp = parse_ratfun("t/(1-t)", {"t"});
    report("restrict (N=40)", seconds([&] { restrict_serial(b, xp, yp, 40); }),
           seconds([&] { restrict(b, xp, yp, 40); }));
}
