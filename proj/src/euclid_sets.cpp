#include "boxlab/euclid_sets.hpp"

#include <algorithm>
#include <cmath>

#include "boxlab/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boxlab::euclid {

namespace {

// Range of (y_i - x_i) for y_i in the closed cell slab, then squared.
double squareRangeLo(double lo, double hi) {
    if (lo <= 0.0 && hi >= 0.0) return 0.0;
    const double m = std::min(std::abs(lo), std::abs(hi));
    return m * m;
}
double squareRangeHi(double lo, double hi) {
    const double m = std::max(std::abs(lo), std::abs(hi));
    return m * m;
}

Interval distSqRangePointCell(const Point& x, const Cell& c, int d, double delta) {
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < d; ++i) {
        const double a = c[i] * delta - x[i];
        const double b = (c[i] + 1) * delta - x[i];
        lo += squareRangeLo(a, b);
        hi += squareRangeHi(a, b);
    }
    return {lo, hi};
}

Interval distSqRangeCellCell(const Cell& a, const Cell& b, int d, double delta) {
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < d; ++i) {
        const double dlo = (a[i] - b[i] - 1) * delta;
        const double dhi = (a[i] - b[i] + 1) * delta;
        lo += squareRangeLo(dlo, dhi);
        hi += squareRangeHi(dlo, dhi);
    }
    return {lo, hi};
}

double combineLegs(double u, double v, const CombineNorm& norm) {
    if (norm.squared) return u * u + v * v; // legs passed as plain distances
    return std::pow(std::pow(u, norm.p) + std::pow(v, norm.p), 1.0 / norm.p);
}

void requireNorm(const CombineNorm& norm) {
    if (!norm.squared && norm.p < 1.0)
        throw PreconditionError("combine norm exponent must be >= 1");
}

} // namespace

Interval cellDistanceRange(const Point& x, const Cell& c, int d, double delta) {
    const Interval sq = distSqRangePointCell(x, c, d, delta);
    return {std::sqrt(sq.lo), std::sqrt(sq.hi)};
}

Interval cellPairDistanceRange(const Cell& a, const Cell& b, int d, double delta) {
    const Interval sq = distSqRangeCellCell(a, b, d, delta);
    return {std::sqrt(sq.lo), std::sqrt(sq.hi)};
}

IntervalUnion pinnedDistSquaredSet(const GridSet& E, const Point& x) {
    std::vector<Interval> raw;
    raw.reserve(E.size());
    for (const Cell& c : E.cells())
        raw.push_back(distSqRangePointCell(x, c, E.dim(), E.delta()));
    return IntervalUnion::fromIntervals(std::move(raw));
}

IntervalUnion pinnedDistanceSet(const GridSet& E, const Point& x) {
    std::vector<Interval> raw;
    raw.reserve(E.size());
    for (const Cell& c : E.cells())
        raw.push_back(cellDistanceRange(x, c, E.dim(), E.delta()));
    return IntervalUnion::fromIntervals(std::move(raw));
}

IntervalUnion boxSetApprox(const GridSet& E, const GridSet& E1, const GridSet& E2,
                           const CombineNorm& norm) {
    requireNorm(norm);
    if (E.dim() != E1.dim() || E.dim() != E2.dim() ||
        E.resolution() != E1.resolution() || E.resolution() != E2.resolution())
        throw StructuralError("boxSetApprox: grids disagree on dimension or resolution");
    if (!E1.disjointFrom(E2))
        throw PreconditionError("boxSetApprox: E1 and E2 must be disjoint");

    const int d = E.dim();
    const double delta = E.delta();
    const std::int64_t nx = static_cast<std::int64_t>(E.size());

    // Per-x interval lists gathered in deterministic x order, merged in
    // a sequential post-pass.
    std::vector<std::vector<Interval>> perX(E.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t ix = 0; ix < nx; ++ix) {
        const Cell& xc = E.cells()[static_cast<std::size_t>(ix)];
        auto& local = perX[static_cast<std::size_t>(ix)];
        local.reserve(E1.size() * E2.size());
        for (const Cell& yc : E1.cells()) {
            const Interval dy = cellPairDistanceRange(yc, xc, d, delta);
            for (const Cell& zc : E2.cells()) {
                const Interval dz = cellPairDistanceRange(zc, xc, d, delta);
                local.push_back({combineLegs(dy.lo, dz.lo, norm),
                                 combineLegs(dy.hi, dz.hi, norm)});
            }
        }
    }
    std::vector<Interval> raw;
    for (auto& v : perX) raw.insert(raw.end(), v.begin(), v.end());
    return IntervalUnion::fromIntervals(std::move(raw));
}

IntervalUnion pinnedBoxSetApprox(const GridSet& E1, const GridSet& E2,
                                 const Point& x, const CombineNorm& norm) {
    requireNorm(norm);
    if (E1.dim() != E2.dim() || E1.resolution() != E2.resolution())
        throw StructuralError("pinnedBoxSetApprox: grids disagree");
    if (!E1.disjointFrom(E2))
        throw PreconditionError("pinnedBoxSetApprox: E1 and E2 must be disjoint");
    const int d = E1.dim();
    const double delta = E1.delta();
    std::vector<Interval> raw;
    raw.reserve(E1.size() * E2.size());
    for (const Cell& yc : E1.cells()) {
        const Interval dy = cellDistanceRange(x, yc, d, delta);
        for (const Cell& zc : E2.cells()) {
            const Interval dz = cellDistanceRange(x, zc, d, delta);
            raw.push_back({combineLegs(dy.lo, dz.lo, norm),
                           combineLegs(dy.hi, dz.hi, norm)});
        }
    }
    return IntervalUnion::fromIntervals(std::move(raw));
}

double trilinearMass(const DiscreteMeasure& mu, const DiscreteMeasure& mu1,
                     const DiscreteMeasure& mu2, double t, double eps) {
    if (eps <= 0.0) throw PreconditionError("trilinearMass: eps must be > 0");
    const GridSet& S = mu.support;
    const GridSet& S1 = mu1.support;
    const GridSet& S2 = mu2.support;
    if (S.dim() != S1.dim() || S.dim() != S2.dim())
        throw StructuralError("trilinearMass: supports disagree on dimension");
    if (S.empty() || S1.empty() || S2.empty()) return 0.0;

    const int d = S.dim();
    const double lo = std::max(t - eps, 0.0);
    const double hi = t + eps;
    const double loSq = lo * lo, hiSq = hi * hi;

    auto distSq = [&](const std::array<double, kMaxGridDim>& a,
                      const std::array<double, kMaxGridDim>& b) {
        double acc = 0.0;
        for (int i = 0; i < d; ++i) { const double g = a[i] - b[i]; acc += g * g; }
        return acc;
    };

    std::vector<std::array<double, kMaxGridDim>> cx, cy, cz;
    for (const Cell& c : S.cells()) cx.push_back(S.center(c));
    for (const Cell& c : S1.cells()) cy.push_back(S1.center(c));
    for (const Cell& c : S2.cells()) cz.push_back(S2.center(c));

    // |(y,z)-(x,x)|^2 = |y-x|^2 + |z-x|^2. For each x, sort the z leg
    // and count admissible pairs by binary search: exact integer count,
    // independent of thread schedule.
    const std::int64_t nx = static_cast<std::int64_t>(cx.size());
    std::vector<std::int64_t> perX(cx.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nx; ++i) {
        const auto& x = cx[static_cast<std::size_t>(i)];
        std::vector<double> b;
        b.reserve(cz.size());
        for (const auto& z : cz) b.push_back(distSq(z, x));
        std::sort(b.begin(), b.end());
        std::int64_t count = 0;
        for (const auto& y : cy) {
            const double a = distSq(y, x);
            const auto first = std::lower_bound(b.begin(), b.end(), loSq - a);
            const auto last = std::upper_bound(b.begin(), b.end(), hiSq - a);
            count += last - first;
        }
        perX[static_cast<std::size_t>(i)] = count;
    }
    std::int64_t total = 0;
    for (std::int64_t c : perX) total += c;
    return static_cast<double>(total) /
           (static_cast<double>(cx.size()) * static_cast<double>(cy.size()) *
            static_cast<double>(cz.size()));
}

IntervalUnion chainLengthSet(const GridSet& E, const Point& x, int k) {
    if (k < 1 || k > 4)
        throw PreconditionError("chainLengthSet: k must lie in [1, 4]");
    if (static_cast<int>(E.size()) < k)
        throw DegenerateInputError("chainLengthSet: need at least k cells");
    const int d = E.dim();
    const double delta = E.delta();

    // cell holding the pin; chain vertices must avoid it
    Cell xcell{};
    for (int i = 0; i < d; ++i) {
        const auto c = static_cast<std::int32_t>(std::floor(x[i] / delta));
        xcell[i] = std::clamp<std::int32_t>(c, 0, (std::int32_t(1) << E.resolution()) - 1);
    }

    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < E.size(); ++i)
        if (E.cells()[i] != xcell) usable.push_back(i);
    if (static_cast<int>(usable.size()) < k)
        throw DegenerateInputError("chainLengthSet: not enough cells distinct from the pin's");

    std::vector<Interval> raw;
    std::vector<std::size_t> tuple;
    std::vector<bool> used(E.size(), false);

    // ordered tuples of distinct cells; link ranges summed as intervals
    auto rec = [&](auto&& self, double lo, double hi) -> void {
        if (static_cast<int>(tuple.size()) == k) {
            raw.push_back({lo, hi});
            return;
        }
        for (std::size_t idx : usable) {
            if (used[idx]) continue;
            const Cell& next = E.cells()[idx];
            Interval link = tuple.empty()
                                ? cellDistanceRange(x, next, d, delta)
                                : cellPairDistanceRange(E.cells()[tuple.back()], next,
                                                        d, delta);
            used[idx] = true;
            tuple.push_back(idx);
            self(self, lo + link.lo, hi + link.hi);
            tuple.pop_back();
            used[idx] = false;
        }
    };
    rec(rec, 0.0, 0.0);
    return IntervalUnion::fromIntervals(std::move(raw));
}

IntervalUnion perimeterSet(const GridSet& E) {
    if (E.dim() < 2)
        throw PreconditionError("perimeterSet: dimension must be >= 2");
    if (E.size() < 3)
        throw DegenerateInputError("perimeterSet: need at least 3 cells");
    const int d = E.dim();
    const double delta = E.delta();
    const auto& cells = E.cells();

    std::vector<Interval> raw;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            const Interval ab = cellPairDistanceRange(cells[i], cells[j], d, delta);
            for (std::size_t k = j + 1; k < cells.size(); ++k) {
                const Interval bc = cellPairDistanceRange(cells[j], cells[k], d, delta);
                const Interval ca = cellPairDistanceRange(cells[k], cells[i], d, delta);
                raw.push_back({ab.lo + bc.lo + ca.lo, ab.hi + bc.hi + ca.hi});
            }
        }
    return IntervalUnion::fromIntervals(std::move(raw));
}

BinnedHistogram jointDistanceHistogram(const GridSet& A, const GridSet& B, int bins) {
    if (bins < 1) throw PreconditionError("jointDistanceHistogram: bins must be >= 1");
    if (A.dim() != B.dim())
        throw StructuralError("jointDistanceHistogram: dimension mismatch");
    const int d = A.dim();
    BinnedHistogram h{0.0, std::sqrt(2.0 * d), std::vector<double>(bins, 0.0)};
    if (A.empty() || B.empty()) return h;

    const double w = 1.0 / (static_cast<double>(A.size()) * static_cast<double>(B.size()));
    for (const Cell& a : A.cells()) {
        const auto pa = A.center(a);
        for (const Cell& b : B.cells()) {
            const auto pb = B.center(b);
            double acc = 0.0;
            for (int i = 0; i < d; ++i) { const double g = pa[i] - pb[i]; acc += g * g; }
            const double dist = std::sqrt(acc);
            int bin = static_cast<int>(dist / h.hi * bins);
            bin = std::clamp(bin, 0, bins - 1);
            h.mass[bin] += w;
        }
    }
    return h;
}

namespace serial {

double trilinearMassNaive(const DiscreteMeasure& mu, const DiscreteMeasure& mu1,
                          const DiscreteMeasure& mu2, double t, double eps) {
    const GridSet& S = mu.support;
    const GridSet& S1 = mu1.support;
    const GridSet& S2 = mu2.support;
    if (S.empty() || S1.empty() || S2.empty()) return 0.0;
    const int d = S.dim();
    const double lo = std::max(t - eps, 0.0), hi = t + eps;
    std::int64_t count = 0;
    for (const Cell& a : S.cells()) {
        const auto x = S.center(a);
        for (const Cell& b : S1.cells()) {
            const auto y = S1.center(b);
            for (const Cell& c : S2.cells()) {
                const auto z = S2.center(c);
                double acc = 0.0;
                for (int i = 0; i < d; ++i) {
                    const double g1 = y[i] - x[i], g2 = z[i] - x[i];
                    acc += g1 * g1 + g2 * g2;
                }
                const double v = std::sqrt(acc);
                if (v >= lo && v <= hi) ++count;
            }
        }
    }
    return static_cast<double>(count) /
           (static_cast<double>(S.size()) * static_cast<double>(S1.size()) *
            static_cast<double>(S2.size()));
}

} // namespace serial

} // namespace boxlab::euclid
