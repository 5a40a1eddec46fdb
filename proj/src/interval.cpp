#include "boxlab/interval.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "boxlab/errors.hpp"

namespace boxlab::euclid {

IntervalUnion IntervalUnion::fromIntervals(std::vector<Interval> raw) {
    IntervalUnion out;
    for (const Interval& c : raw)
        if (!(c.lo <= c.hi))
            throw StructuralError("IntervalUnion: interval with lo > hi");
    if (raw.empty()) return out;
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) {
                  return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    out.comps_.push_back(raw.front());
    for (std::size_t i = 1; i < raw.size(); ++i) {
        Interval& last = out.comps_.back();
        if (raw[i].lo <= last.hi) {
            // closed intervals merge when they touch
            last.hi = std::max(last.hi, raw[i].hi);
        } else {
            out.comps_.push_back(raw[i]);
        }
    }
    return out;
}

double IntervalUnion::measure() const {
    double m = 0.0;
    for (const Interval& c : comps_) m += c.length();
    return m;
}

bool IntervalUnion::contains(double x, double slack) const {
    for (const Interval& c : comps_)
        if (x >= c.lo - slack && x <= c.hi + slack) return true;
    return false;
}

bool IntervalUnion::isSubsetOf(const IntervalUnion& other, double slack) const {
    for (const Interval& c : comps_) {
        bool covered = false;
        for (const Interval& o : other.comps_) {
            if (c.lo >= o.lo - slack && c.hi <= o.hi + slack) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

IntervalUnion minkowskiSum(const IntervalUnion& U, const IntervalUnion& V) {
    std::vector<Interval> sums;
    sums.reserve(U.components().size() * V.components().size());
    for (const Interval& u : U.components())
        for (const Interval& v : V.components())
            sums.push_back({u.lo + v.lo, u.hi + v.hi});
    return IntervalUnion::fromIntervals(std::move(sums));
}

std::optional<Interval> containedInterval(const IntervalUnion& U) {
    if (U.empty()) return std::nullopt;
    const Interval* best = &U.components().front();
    for (const Interval& c : U.components())
        if (c.length() > best->length()) best = &c; // strict: leftmost wins ties
    return *best;
}

void writeIntervalUnionCsv(std::ostream& os, const IntervalUnion& U) {
    os << "lo,hi\n";
    os.precision(17);
    for (const Interval& c : U.components()) os << c.lo << ',' << c.hi << '\n';
}

IntervalUnion readIntervalUnionCsv(std::istream& is) {
    std::string line;
    std::getline(is, line); // header
    std::vector<Interval> raw;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        raw.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    return IntervalUnion::fromIntervals(std::move(raw));
}

} // namespace boxlab::euclid
