#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

namespace boxlab::euclid {

struct Interval {
    double lo;
    double hi;

    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

// Finite disjoint union of closed real intervals, sorted by lo.
// Components touching at an endpoint are merged (gap <= 0).
class IntervalUnion {
public:
    IntervalUnion() = default;
    static IntervalUnion fromIntervals(std::vector<Interval> raw);

    const std::vector<Interval>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    std::size_t componentCount() const { return comps_.size(); }
    double measure() const;

    bool contains(double x, double slack = 0.0) const;
    // Every component of *this lies inside some component of other,
    // with endpoints allowed to stick out by `slack`.
    bool isSubsetOf(const IntervalUnion& other, double slack = 0.0) const;

    bool operator==(const IntervalUnion&) const = default;

private:
    std::vector<Interval> comps_;
};

// {u + v : u in U, v in V} as an exact union of pairwise interval sums.
IntervalUnion minkowskiSum(const IntervalUnion& U, const IntervalUnion& V);

// Longest component, leftmost on ties; absent if U is empty.
std::optional<Interval> containedInterval(const IntervalUnion& U);

// CSV with columns lo,hi.
void writeIntervalUnionCsv(std::ostream& os, const IntervalUnion& U);
IntervalUnion readIntervalUnionCsv(std::istream& is);

} // namespace boxlab::euclid
