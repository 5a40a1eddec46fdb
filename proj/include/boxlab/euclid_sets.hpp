#pragma once

#include <array>
#include <vector>

#include "boxlab/grid.hpp"
#include "boxlab/interval.hpp"

namespace boxlab::euclid {

using Point = std::array<double, kMaxGridDim>;

// How a pair of legs |y-x|, |z-x| is combined into one value.
//   pNorm(p): (|y-x|^p + |z-x|^p)^{1/p}   (p = 2 is the plain box set,
//             p = 1 gives two-chain lengths)
//   squared:  |y-x|^2 + |z-x|^2           (the primed box set Box')
struct CombineNorm {
    double p = 2.0;
    bool squared = false;

    static CombineNorm pNorm(double p) { return {p, false}; }
    static CombineNorm euclidSquared() { return {2.0, true}; }
};

// Per-cell interval arithmetic: exact range of |x - y| (Euclidean) for
// y ranging over the closed cell. Building blocks for the set-valued
// operations below.
Interval cellDistanceRange(const Point& x, const Cell& c, int d, double delta);
Interval cellPairDistanceRange(const Cell& a, const Cell& b, int d, double delta);

// Delta'_x(E) = {|x-y|^2 : y in E}, one interval per cell, merged.
IntervalUnion pinnedDistSquaredSet(const GridSet& E, const Point& x);

// Plain pinned distance set {|x-y| : y in E}.
IntervalUnion pinnedDistanceSet(const GridSet& E, const Point& x);

// Union over (x, y, z) cell triples, x in E, y in E1, z in E2, of the
// achievable combined-norm values. E1 and E2 must be disjoint.
IntervalUnion boxSetApprox(const GridSet& E, const GridSet& E1, const GridSet& E2,
                           const CombineNorm& norm = {});

// Same with the pin fixed at a point x instead of ranging over E.
IntervalUnion pinnedBoxSetApprox(const GridSet& E1, const GridSet& E2,
                                 const Point& x, const CombineNorm& norm = {});

// (mu x mu1 x mu2)-mass of {(x,y,z) : |(y,z)-(x,x)| in [t-eps, t+eps]},
// over cell-center triples with uniform weights. Exact pair counting, so
// the value is monotone non-decreasing in eps.
double trilinearMass(const DiscreteMeasure& mu, const DiscreteMeasure& mu1,
                     const DiscreteMeasure& mu2, double t, double eps);

// L^k_x(E): sums t_1 + ... + t_k over ordered k-tuples of distinct
// cells (none equal to x's cell), each link by interval arithmetic.
IntervalUnion chainLengthSet(const GridSet& E, const Point& x, int k);

// P_2(E): perimeters |ab| + |bc| + |ca| over unordered triples of
// distinct cells. Collinear (degenerate) triples are included.
IntervalUnion perimeterSet(const GridSet& E);

struct BinnedHistogram {
    double lo;
    double hi;
    std::vector<double> mass; // sums to 1 for nonempty inputs
};

// Distribution of |a - b| over cell-center pairs, binned over [0, sqrt(2d)].
BinnedHistogram jointDistanceHistogram(const GridSet& A, const GridSet& B, int bins);

namespace serial {
// Reference triple loop over individual triples; oracle for trilinearMass.
double trilinearMassNaive(const DiscreteMeasure& mu, const DiscreteMeasure& mu1,
                          const DiscreteMeasure& mu2, double t, double eps);
} // namespace serial

} // namespace boxlab::euclid
