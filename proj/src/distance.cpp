#include "boxlab/distance.hpp"

#include <algorithm>

#include "boxlab/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boxlab::ff {

namespace {

struct Kernel {
    Scalar p;
    std::uint32_t d;
    std::vector<Scalar> sq; // sq[v] = v^2 mod p

    explicit Kernel(const PointSet& E) : p(E.modulus().p()), d(E.dim()), sq(p) {
        for (Scalar v = 0; v < p; ++v)
            sq[v] = static_cast<Scalar>((static_cast<std::uint64_t>(v) * v) % p);
    }

    // ||a - b|| for two coordinate rows.
    Scalar dist(const Scalar* a, const Scalar* b) const {
        Scalar acc = 0;
        for (std::uint32_t i = 0; i < d; ++i) {
            const Scalar diff = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
            acc += sq[diff];
            if (acc >= p) acc -= p;
        }
        return acc;
    }
};

void requireSame(const PointSet& A, const PointSet& B) {
    if (!(A.modulus() == B.modulus()) || A.dim() != B.dim())
        throw StructuralError("point sets disagree on modulus or dimension");
}

void requireDim(const PointSet& E, const FFVec& x) {
    if (!(E.modulus() == x.p) || E.dim() != x.dim())
        throw StructuralError("pin point disagrees with set on modulus or dimension");
}

// Per-pin sums t1 + t2 over the support of nu with the y != z rule:
// t1 == t2 needs multiplicity >= 2. Stops early once `found` is full.
void accumulatePinSums(const PrimeModulus& mod, const std::vector<std::int64_t>& nu,
                       ScalarSet& found) {
    std::vector<Scalar> present;
    for (Scalar t = 0; t < mod.p(); ++t)
        if (nu[t] > 0) present.push_back(t);
    for (std::size_t i = 0; i < present.size(); ++i) {
        const Scalar t1 = present[i];
        if (nu[t1] >= 2) found.insert(mod.add(t1, t1));
        for (std::size_t j = i + 1; j < present.size(); ++j)
            found.insert(mod.add(t1, present[j]));
        if (found.full()) return;
    }
}

} // namespace

ScalarSet distanceSet(const PointSet& E) {
    const Kernel K(E);
    const auto M = E.coordMatrix();
    const std::uint64_t n = E.card();
    ScalarSet out(E.modulus());
    for (std::uint64_t i = 0; i < n && !out.full(); ++i) {
        const Scalar* a = M.data() + i * K.d;
        for (std::uint64_t j = i; j < n; ++j)
            out.insert(K.dist(a, M.data() + j * K.d));
    }
    return out;
}

ScalarSet pinnedDistanceSet(const PointSet& E, const FFVec& x) {
    requireDim(E, x);
    const Kernel K(E);
    const auto M = E.coordMatrix();
    ScalarSet out(E.modulus());
    for (std::uint64_t j = 0; j < E.card(); ++j)
        out.insert(K.dist(x.coords.data(), M.data() + j * K.d));
    return out;
}

bool boxSetComplete(const ScalarSet& box, std::uint32_t d) {
    if (box.full()) return true;
    if (d != 1 || box.modulus().p() % 4 != 3) return false;
    return box.card() == box.modulus().p() - 1 && !box.contains(0);
}

ScalarSet boxSet(const PointSet& E) {
    const PrimeModulus mod = E.modulus();
    ScalarSet out(mod);
    if (E.card() < 2) return out;
    const Kernel K(E);
    const auto M = E.coordMatrix();
    const std::uint64_t n = E.card();

    std::vector<std::int64_t> nu(mod.p());
    for (std::uint64_t i = 0; i < n; ++i) {
        const Scalar* x = M.data() + i * K.d;
        std::fill(nu.begin(), nu.end(), 0);
        for (std::uint64_t j = 0; j < n; ++j)
            ++nu[K.dist(x, M.data() + j * K.d)];
        accumulatePinSums(mod, nu, out);
        // stop once no further value is attainable
        if (boxSetComplete(out, K.d)) break;
    }
    return out;
}

ScalarSet pinnedBoxSet(const PointSet& E, const FFVec& x) {
    requireDim(E, x);
    const PrimeModulus mod = E.modulus();
    ScalarSet out(mod);
    if (E.card() < 2) return out;
    const Kernel K(E);
    const auto M = E.coordMatrix();
    std::vector<std::int64_t> nu(mod.p(), 0);
    for (std::uint64_t j = 0; j < E.card(); ++j)
        ++nu[K.dist(x.coords.data(), M.data() + j * K.d)];
    accumulatePinSums(mod, nu, out);
    return out;
}

ScalarSet jointDistanceSet(const PointSet& A, const PointSet& B) {
    requireSame(A, B);
    const Kernel K(A);
    const auto MA = A.coordMatrix();
    const auto MB = B.coordMatrix();
    ScalarSet out(A.modulus());
    for (std::uint64_t i = 0; i < A.card() && !out.full(); ++i) {
        const Scalar* a = MA.data() + i * K.d;
        for (std::uint64_t j = 0; j < B.card(); ++j)
            out.insert(K.dist(a, MB.data() + j * K.d));
    }
    return out;
}

Histogram countingFunction(const PointSet& E, const FFVec& x) {
    requireDim(E, x);
    const Kernel K(E);
    const auto M = E.coordMatrix();
    Histogram h(E.modulus());
    for (std::uint64_t j = 0; j < E.card(); ++j)
        ++h.at(K.dist(x.coords.data(), M.data() + j * K.d));
    return h;
}

Histogram jointCountingFunction(const PointSet& A, const PointSet& B) {
    requireSame(A, B);
    const Kernel K(A);
    const auto MA = A.coordMatrix();
    const auto MB = B.coordMatrix();
    Histogram h(A.modulus());
    const std::uint64_t nb = B.card();
#ifdef _OPENMP
    // Parallel over rows of A with per-thread histograms, merged in
    // thread order; integer sums, so bit-identical to the serial order.
    const std::int64_t na = static_cast<std::int64_t>(A.card());
    const int maxThreads = omp_get_max_threads();
    std::vector<std::vector<std::int64_t>> partial(
        maxThreads, std::vector<std::int64_t>(K.p, 0));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < na; ++i) {
        auto& local = partial[omp_get_thread_num()];
        const Scalar* a = MA.data() + static_cast<std::uint64_t>(i) * K.d;
        for (std::uint64_t j = 0; j < nb; ++j)
            ++local[K.dist(a, MB.data() + j * K.d)];
    }
    for (const auto& local : partial)
        for (Scalar t = 0; t < K.p; ++t) h.at(t) += local[t];
#else
    for (std::uint64_t i = 0; i < A.card(); ++i) {
        const Scalar* a = MA.data() + i * K.d;
        for (std::uint64_t j = 0; j < nb; ++j)
            ++h.at(K.dist(a, MB.data() + j * K.d));
    }
#endif
    return h;
}

std::pair<PointSet, PointSet> splitHalves(const PointSet& E, std::uint64_t seed) {
    if (E.card() < 2)
        throw DegenerateInputError("splitHalves needs |E| >= 2");
    auto idx = E.indices();
    Rng rng(seed);
    rng.shuffle(idx);
    PointSet E1(E.modulus(), E.dim()), E2(E.modulus(), E.dim());
    const std::size_t half = idx.size() - idx.size() / 2; // ceil
    for (std::size_t i = 0; i < idx.size(); ++i)
        (i < half ? E1 : E2).insert(idx[i]);
    return {std::move(E1), std::move(E2)};
}

std::pair<PointSet, PointSet> productWithDiagonal(const PointSet& E1,
                                                  const PointSet& E2,
                                                  const PointSet& E) {
    requireSame(E1, E2);
    requireSame(E1, E);
    const std::uint32_t d = E.dim();
    PointSet A(E.modulus(), 2 * d); // throws CapacityError if p^{2d} > cap
    PointSet B(E.modulus(), 2 * d);

    std::vector<Scalar> coords(2 * d);
    for (std::uint64_t ia : E1.indices()) {
        const auto a = E1.decode(ia);
        std::copy(a.begin(), a.end(), coords.begin());
        for (std::uint64_t ib : E2.indices()) {
            const auto b = E2.decode(ib);
            std::copy(b.begin(), b.end(), coords.begin() + d);
            A.insertPoint(coords);
        }
    }
    for (std::uint64_t ix : E.indices()) {
        const auto x = E.decode(ix);
        std::copy(x.begin(), x.end(), coords.begin());
        std::copy(x.begin(), x.end(), coords.begin() + d);
        B.insertPoint(coords);
    }
    return {std::move(A), std::move(B)};
}

namespace serial {

ScalarSet boxSet(const PointSet& E) {
    const Kernel K(E);
    const auto M = E.coordMatrix();
    const std::uint64_t n = E.card();
    const PrimeModulus mod = E.modulus();
    ScalarSet out(mod);
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
            for (std::uint64_t k = 0; k < n; ++k) {
                if (j == k) continue;
                const Scalar* x = M.data() + i * K.d;
                const Scalar t1 = K.dist(x, M.data() + j * K.d);
                const Scalar t2 = K.dist(x, M.data() + k * K.d);
                out.insert(mod.add(t1, t2));
            }
    return out;
}

ScalarSet distanceSet(const PointSet& E) {
    const Kernel K(E);
    const auto M = E.coordMatrix();
    const std::uint64_t n = E.card();
    ScalarSet out(E.modulus());
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
            out.insert(K.dist(M.data() + i * K.d, M.data() + j * K.d));
    return out;
}

} // namespace serial

} // namespace boxlab::ff
