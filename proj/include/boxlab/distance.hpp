#pragma once

#include <cstdint>
#include <utility>

#include "boxlab/point_set.hpp"

namespace boxlab::ff {

// Delta(E) = {||x-y|| : x, y in E}.
ScalarSet distanceSet(const PointSet& E);

// Delta_x(E) = {||x-y|| : y in E}; x need not belong to E.
ScalarSet pinnedDistanceSet(const PointSet& E, const FFVec& x);

// Box(E) = {||x-y|| + ||x-z|| : x, y, z in E, y != z}. Early-exits once
// all p values have been hit.
ScalarSet boxSet(const PointSet& E);

// {||x-y|| + ||x-z|| : y, z in E, y != z} for a fixed pin x.
ScalarSet pinnedBoxSet(const PointSet& E, const FFVec& x);

// Delta(A, B) = {||a-b|| : a in A, b in B}.
ScalarSet jointDistanceSet(const PointSet& A, const PointSet& B);

// Whether a box set covers every structurally attainable value. For
// d = 1 over p = 3 mod 4 the value 0 is unattainable by any E:
// ||x-y|| + ||x-z|| = 0 forces (x-z)^2 = -(x-y)^2, and -1 is not a
// square there, so y = z = x, which the y != z rule excludes. In every
// other regime "complete" simply means all of F_p.
bool boxSetComplete(const ScalarSet& box, std::uint32_t d);

// nu_x(t) = #{y in E : ||x-y|| = t}; total() = |E|.
Histogram countingFunction(const PointSet& E, const FFVec& x);

// nu(t) = #{(a,b) in A x B : ||a-b|| = t}; total() = |A||B|.
Histogram jointCountingFunction(const PointSet& A, const PointSet& B);

// Disjoint E1, E2 with E1 u E2 = E and ||E1|-|E2|| <= 1, by a seeded
// shuffle of the member list. Deterministic given the seed.
std::pair<PointSet, PointSet> splitHalves(const PointSet& E, std::uint64_t seed);

// A = E1 x E2 and B = {(x,x) : x in E} as point sets in dimension 2d.
std::pair<PointSet, PointSet> productWithDiagonal(const PointSet& E1,
                                                  const PointSet& E2,
                                                  const PointSet& E);

namespace serial {
// Reference implementations: plain nested loops, no early exit, no
// OpenMP. Kept as oracles for the production kernels.
ScalarSet boxSet(const PointSet& E);
ScalarSet distanceSet(const PointSet& E);
} // namespace serial

} // namespace boxlab::ff
