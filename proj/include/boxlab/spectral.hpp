#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "boxlab/point_set.hpp"

namespace boxlab::ff {

using int128 = __int128;

// Complex values indexed by frequency m in F_p^d (same mixed-radix
// encoding as PointSet).
struct SpectrumTable {
    PrimeModulus p;
    std::uint32_t d;
    std::vector<Complex> values;

    const Complex& operator[](std::uint64_t m) const { return values[m]; }
};

// fhat(m) = p^{-d} sum_{x in f} chi(-x.m), computed as d successive
// length-p DFTs. This normalization makes Parseval read
// sum_m |fhat(m)|^2 = p^{-d} |E| for an indicator.
SpectrumTable fourierTransform(const PointSet& f);

// f(x) = sum_m fhat(m) chi(x.m); recovers the indicator within 1e-9.
std::vector<Complex> inverseTransform(const SpectrumTable& fhat);

// max over m != 0 of |Shat_t(m)|. The Weil-Salie bound says this is at
// most 2 p^{-3/2} in dimension 2.
double sphereFourierMax(const PrimeModulus& p, std::uint32_t d, Scalar t);

inline double weilSalieBound(const PrimeModulus& p) {
    double pd = static_cast<double>(p.p());
    return 2.0 / (pd * std::sqrt(pd));
}

// Number of triples (x,y,z) in E^3 with ||x-y|| = ||x-z|| = t,
// computed as sum_{x in E} nu_x(t)^2.
int128 hingeCount(const PointSet& E, Scalar t);

struct ErrorTermReport {
    Scalar t;
    int128 hinge;        // exact triple count
    double mainTerm;     // |E|^3 / p^2
    double D;            // hinge - mainTerm, from exact integer subtraction
    double bound;        // (4/ln 2) p^{(d+1)/2} |E|^2 / p^2
    bool satisfied;      // |D| <= bound
};

// Decomposition hinge = |E|^3 p^{-2} + D(E) with the (4/log 2) bound.
ErrorTermReport errorTermD(const PointSet& E, Scalar t);

// lambda_theta^A(z) = #{(u,v) in A x A : u - theta v = z}, counts over
// z in F_p^2 (flat index z1 + p*z2).
std::vector<std::int64_t> lambdaTable(const PointSet& A, const OrthMatrix2& theta);

struct Nu2Report {
    int128 lhs;  // sum_t nu(t)^2
    int128 rhs;  // |A||B| + sum_theta sum_z lambda^A lambda^B
    bool satisfied;
};

// sum_t nu^2(t) <= |A||B| + sum_{theta in O_2} sum_z lambda^A lambda^B,
// all exact integers.
Nu2Report nuSquareInequality(const PointSet& A, const PointSet& B);

namespace serial {
// Naive O(|E|^3) triple loop; oracle for hingeCount (|E| <= 64 scale).
int128 hingeCountNaive(const PointSet& E, Scalar t);
} // namespace serial

std::string int128ToString(int128 v);

} // namespace boxlab::ff
