// Benchmark comparing the serial and OpenMP Macaulay fill kernels and the
// per-point specialized-operator loop.
#include <chrono>
#include <cstdio>
#include <random>

#include "noethops/macaulay.hpp"
#include "noethops/noetherian.hpp"

using namespace noethops;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_fill(int nvars, int gen_degree, int ngens, int dual_degree, int reps) {
    std::vector<std::string> names;
    for (int v = 0; v < nvars; ++v) names.push_back("x" + std::to_string(v + 1));
    RingPtr ring = Ring::make(names, CoeffField::ComplexDouble);

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ud(-2, 2);
    std::vector<CPoly> gens;
    for (int g = 0; g < ngens; ++g) {
        CPoly f = CPoly::zero(ring);
        for (const auto& m : monomials_up_to_degree(static_cast<size_t>(nvars), gen_degree))
            f.add_term(m, Complex(ud(rng), ud(rng)));
        gens.push_back(std::move(f));
    }
    int maxdeg = gen_degree;
    std::vector<CPoly> rows;
    for (const auto& g : gens)
        for (const auto& m :
             monomials_up_to_degree(static_cast<size_t>(nvars), dual_degree + maxdeg - gen_degree))
            rows.push_back(g.mul_term(m, Complex(1, 0)));
    auto cols = monomials_up_to_degree(static_cast<size_t>(nvars), dual_degree);
    std::vector<Complex> point(static_cast<size_t>(nvars));
    for (auto& z : point) z = Complex(ud(rng), ud(rng));

    auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) {
        CMatrix m = macaulay_fill_serial(rows, cols, point);
        if (m.a.empty()) std::abort();
    }
    double serial = ms_since(t0) / reps;

    t0 = Clock::now();
    for (int r = 0; r < reps; ++r) {
        CMatrix m = macaulay_fill_openmp(rows, cols, point);
        if (m.a.empty()) std::abort();
    }
    double parallel = ms_since(t0) / reps;

    std::printf("macaulay fill  %4zu x %-4zu  serial %8.3f ms   openmp %8.3f ms   speedup %.2fx\n",
                rows.size(), cols.size(), serial, parallel, serial / parallel);
}

void bench_points(int npoints) {
    RingPtr r = Ring::make({"x1", "x2", "x3"});
    QPoly x1 = QPoly::variable(r, 0), x2 = QPoly::variable(r, 1), x3 = QPoly::variable(r, 2);
    Ideal Q(r, {x1 * x1, x2 * x2, x1 - x2 * x3});
    SamplerConfig cfg;
    cfg.rng_seed = 7;
    auto pts = sample_points(Q, npoints, cfg);

    auto run = [&](bool parallel) {
        std::vector<size_t> dims(pts.size());
        auto t0 = Clock::now();
#ifdef NOETHOPS_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (long k = 0; k < static_cast<long>(pts.size()); ++k) {
            auto ops = specialized_noetherian_operators(
                Q, Point::complex_point(pts[static_cast<size_t>(k)]), {0, 1});
            dims[static_cast<size_t>(k)] = ops.size();
        }
        double ms = ms_since(t0);
        for (size_t d : dims)
            if (d != 2) std::abort();
        return ms;
    };
    double serial = run(false);
    double parallel = run(true);
    std::printf("specialized ops at %d points   serial %8.3f ms   openmp %8.3f ms   speedup %.2fx\n",
                npoints, serial, parallel, serial / parallel);
}

} // namespace

int main() {
#ifdef NOETHOPS_OPENMP
    std::printf("openmp enabled\n");
#else
    std::printf("openmp disabled; both columns run the serial kernel\n");
#endif
    bench_fill(3, 2, 3, 4, 20);
    bench_fill(3, 2, 3, 6, 5);
    bench_fill(4, 2, 4, 5, 3);
    bench_points(24);
    return 0;
}
