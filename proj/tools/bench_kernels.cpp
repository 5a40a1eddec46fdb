// Benchmark of the production kernels against their serial reference
// implementations. Prints one line per kernel with both timings and the
// speedup.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "boxlab/distance.hpp"
#include "boxlab/euclid_sets.hpp"
#include "boxlab/experiments.hpp"
#include "boxlab/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ff = boxlab::ff;
namespace eu = boxlab::euclid;

namespace {

template <typename F>
double timeIt(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-24s serial %8.3f s   kernel %8.3f s   speedup %5.2fx\n",
                name, serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    // box set, d=1
    {
        const auto p = ff::PrimeModulus::of(211);
        ff::PointSet E(p, 1);
        for (auto idx : boxlab::harness::detail::sampleSubsetIndices(211, 120, 7))
            E.insert(idx);
        ff::ScalarSet a(p), b(p);
        const double ts = timeIt([&] { a = ff::serial::boxSet(E); });
        const double tk = timeIt([&] { b = ff::boxSet(E); });
        if (!(a == b)) std::printf("box_set MISMATCH\n");
        report("box_set(p=211,|E|=120)", ts, tk);
    }

    // hinge count, d=2
    {
        const auto p = ff::PrimeModulus::of(31);
        ff::PointSet E(p, 2);
        for (auto idx : boxlab::harness::detail::sampleSubsetIndices(31 * 31, 400, 11))
            E.insert(idx);
        ff::int128 a = 0, b = 0;
        const double ts = timeIt([&] { a = ff::serial::hingeCountNaive(E, 5); });
        const double tk = timeIt([&] { b = ff::hingeCount(E, 5); });
        if (a != b) std::printf("hinge_count MISMATCH\n");
        report("hinge(p=31,d=2,|E|=400)", ts, tk);
    }

    // trilinear mass
    {
        const auto E = eu::cantorSet(0.84, 1, 10);
        const eu::DiscreteMeasure mu{E};
        double a = 0, b = 0;
        const double ts =
            timeIt([&] { a = eu::serial::trilinearMassNaive(mu, mu, mu, 1.0, 0.01); });
        const double tk = timeIt([&] { b = eu::trilinearMass(mu, mu, mu, 1.0, 0.01); });
        if (std::abs(a - b) > 1e-9) std::printf("trilinear MISMATCH (%g vs %g)\n", a, b);
        report("trilinear(s=.84,n=10)", ts, tk);
    }
    return 0;
}
