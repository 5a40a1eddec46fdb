#include "boxlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "boxlab/distance.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boxlab::ff {

namespace {

// One length-p DFT pass along axis `axis` with kernel chi(-x*m).
// Each output line entry is computed independently, so the result does
// not depend on the parallel schedule.
void dftAxis(const PrimeModulus& mod, std::uint32_t axis,
             const CharacterTable& chi, std::vector<Complex>& data) {
    const Scalar p = mod.p();
    std::uint64_t stride = 1;
    for (std::uint32_t i = 0; i < axis; ++i) stride *= p;
    const std::uint64_t total = data.size();
    const std::uint64_t block = stride * p;
    const std::int64_t nLines = static_cast<std::int64_t>(total / p);

    std::vector<Complex> next(total);
#pragma omp parallel for schedule(static)
    for (std::int64_t line = 0; line < nLines; ++line) {
        const std::uint64_t l = static_cast<std::uint64_t>(line);
        const std::uint64_t base = (l / stride) * block + (l % stride);
        for (Scalar m = 0; m < p; ++m) {
            Complex acc = 0;
            for (Scalar x = 0; x < p; ++x) {
                const Scalar e = mod.neg(mod.mul(x, m));
                acc += data[base + x * stride] * chi(e);
            }
            next[base + m * stride] = acc;
        }
    }
    data.swap(next);
}

} // namespace

SpectrumTable fourierTransform(const PointSet& f) {
    const PrimeModulus mod = f.modulus();
    const std::uint32_t d = f.dim();
    const CharacterTable chi(mod);

    std::vector<Complex> data(f.universe(), Complex{0.0, 0.0});
    for (std::uint64_t idx : f.indices()) data[idx] = 1.0;
    for (std::uint32_t axis = 0; axis < d; ++axis) dftAxis(mod, axis, chi, data);

    const double scale = 1.0 / static_cast<double>(f.universe());
    for (Complex& v : data) v *= scale;
    return {mod, d, std::move(data)};
}

std::vector<Complex> inverseTransform(const SpectrumTable& fhat) {
    const PrimeModulus mod = fhat.p;
    const Scalar p = mod.p();
    const CharacterTable chi(mod);
    const std::uint64_t total = fhat.values.size();

    // f(x) = sum_m fhat(m) chi(x.m), axis by axis with the conjugate kernel.
    std::vector<Complex> data = fhat.values;
    std::uint64_t stride = 1;
    for (std::uint32_t axis = 0; axis < fhat.d; ++axis) {
        const std::uint64_t block = stride * p;
        std::vector<Complex> next(total);
        for (std::uint64_t line = 0; line < total / p; ++line) {
            const std::uint64_t base = (line / stride) * block + (line % stride);
            for (Scalar x = 0; x < p; ++x) {
                Complex acc = 0;
                for (Scalar m = 0; m < p; ++m)
                    acc += data[base + m * stride] * chi(mod.mul(x, m));
                next[base + x * stride] = acc;
            }
        }
        data.swap(next);
        stride *= p;
    }
    return data;
}

double sphereFourierMax(const PrimeModulus& p, std::uint32_t d, Scalar t) {
    const SpectrumTable shat = fourierTransform(sphere(p, d, t));
    double best = 0.0;
    for (std::uint64_t m = 1; m < shat.values.size(); ++m)
        best = std::max(best, std::abs(shat.values[m]));
    return best;
}

int128 hingeCount(const PointSet& E, Scalar t) {
    const auto M = E.coordMatrix();
    const Scalar p = E.modulus().p();
    const std::uint32_t d = E.dim();
    std::vector<Scalar> sq(p);
    for (Scalar v = 0; v < p; ++v)
        sq[v] = static_cast<Scalar>((static_cast<std::uint64_t>(v) * v) % p);

    const std::int64_t n = static_cast<std::int64_t>(E.card());
#ifdef _OPENMP
    const int maxThreads = omp_get_max_threads();
#else
    const int maxThreads = 1;
#endif
    // Per-thread integer partials summed in thread order: bit-identical
    // to the serial reduction.
    std::vector<int128> partial(maxThreads, 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const Scalar* x = M.data() + static_cast<std::uint64_t>(i) * d;
        std::int64_t nu = 0;
        for (std::int64_t j = 0; j < n; ++j) {
            const Scalar* y = M.data() + static_cast<std::uint64_t>(j) * d;
            Scalar acc = 0;
            for (std::uint32_t c = 0; c < d; ++c) {
                const Scalar diff = x[c] >= y[c] ? x[c] - y[c] : x[c] + p - y[c];
                acc += sq[diff];
                if (acc >= p) acc -= p;
            }
            if (acc == t) ++nu;
        }
#ifdef _OPENMP
        partial[omp_get_thread_num()] += static_cast<int128>(nu) * nu;
#else
        partial[0] += static_cast<int128>(nu) * nu;
#endif
    }
    int128 total = 0;
    for (int128 v : partial) total += v;
    return total;
}

ErrorTermReport errorTermD(const PointSet& E, Scalar t) {
    const int128 hinge = hingeCount(E, t);
    const Scalar p = E.modulus().p();
    const int128 n = static_cast<int128>(E.card());
    const int128 p2 = static_cast<int128>(p) * p;

    // D = hinge - |E|^3/p^2, via the exact integer hinge*p^2 - |E|^3.
    const int128 num = hinge * p2 - n * n * n;
    const double D = static_cast<double>(num) / static_cast<double>(p2);
    const double mainTerm =
        static_cast<double>(n * n * n) / static_cast<double>(p2);
    const double bound = (4.0 / std::log(2.0)) *
                         std::pow(static_cast<double>(p),
                                  (static_cast<double>(E.dim()) + 1.0) / 2.0) *
                         static_cast<double>(n) * static_cast<double>(n) /
                         static_cast<double>(p2);
    return {t, hinge, mainTerm, D, bound, std::abs(D) <= bound};
}

std::vector<std::int64_t> lambdaTable(const PointSet& A, const OrthMatrix2& theta) {
    if (A.dim() != 2 || !(A.modulus() == theta.p))
        throw StructuralError("lambdaTable needs A in F_p^2 over theta's field");
    const PrimeModulus mod = A.modulus();
    const Scalar p = mod.p();
    const auto M = A.coordMatrix();
    const std::uint64_t n = A.card();

    // theta v precomputed per member of A.
    std::vector<std::pair<Scalar, Scalar>> tv(n);
    for (std::uint64_t j = 0; j < n; ++j)
        tv[j] = theta.apply(M[2 * j], M[2 * j + 1]);

    std::vector<std::int64_t> lambda(static_cast<std::size_t>(p) * p, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        const Scalar u0 = M[2 * i], u1 = M[2 * i + 1];
        for (std::uint64_t j = 0; j < n; ++j) {
            const Scalar z0 = mod.sub(u0, tv[j].first);
            const Scalar z1 = mod.sub(u1, tv[j].second);
            ++lambda[static_cast<std::size_t>(z1) * p + z0];
        }
    }
    return lambda;
}

Nu2Report nuSquareInequality(const PointSet& A, const PointSet& B) {
    if (A.dim() != 2 || B.dim() != 2 || !(A.modulus() == B.modulus()))
        throw StructuralError("nuSquareInequality needs A, B in the same F_p^2");
    const PrimeModulus mod = A.modulus();

    const Histogram nu = jointCountingFunction(A, B);
    int128 lhs = 0;
    for (Scalar t = 0; t < mod.p(); ++t)
        lhs += static_cast<int128>(nu[t]) * nu[t];

    int128 rhs = static_cast<int128>(A.card()) * B.card();
    for (const OrthMatrix2& theta : orthogonalGroup2(mod)) {
        const auto la = lambdaTable(A, theta);
        const auto lb = lambdaTable(B, theta);
        for (std::size_t z = 0; z < la.size(); ++z)
            rhs += static_cast<int128>(la[z]) * lb[z];
    }
    return {lhs, rhs, lhs <= rhs};
}

namespace serial {

int128 hingeCountNaive(const PointSet& E, Scalar t) {
    const auto M = E.coordMatrix();
    const Scalar p = E.modulus().p();
    const std::uint32_t d = E.dim();
    const std::uint64_t n = E.card();
    auto distOf = [&](std::uint64_t i, std::uint64_t j) {
        Scalar acc = 0;
        for (std::uint32_t c = 0; c < d; ++c) {
            const Scalar a = M[i * d + c], b = M[j * d + c];
            const Scalar diff = a >= b ? a - b : a + p - b;
            acc = static_cast<Scalar>(
                (acc + static_cast<std::uint64_t>(diff) * diff) % p);
        }
        return acc;
    };
    int128 total = 0;
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y)
            for (std::uint64_t z = 0; z < n; ++z)
                if (distOf(x, y) == t && distOf(x, z) == t) ++total;
    return total;
}

} // namespace serial

std::string int128ToString(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace boxlab::ff
