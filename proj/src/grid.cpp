#include "boxlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "boxlab/errors.hpp"

namespace boxlab::euclid {

GridSet::GridSet(int d, int n) : d_(d), n_(n), delta_(std::ldexp(1.0, -n)) {
    if (d < 1 || d > kMaxGridDim) throw StructuralError("GridSet dimension out of [1,3]");
    if (n < 1 || n > 24) throw StructuralError("GridSet resolution exponent out of [1,24]");
}

GridSet::GridSet(int d, int n, std::vector<Cell> cells) : GridSet(d, n) {
    cells_ = std::move(cells);
    const std::int32_t lim = std::int32_t(1) << n_;
    for (const Cell& c : cells_)
        for (int i = 0; i < d_; ++i)
            if (c[i] < 0 || c[i] >= lim)
                throw StructuralError("cell coordinate out of [0, 2^n)");
    normalize();
}

void GridSet::normalize() {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool GridSet::containsCell(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

void GridSet::insert(const Cell& c) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) cells_.insert(it, c);
}

std::array<double, kMaxGridDim> GridSet::center(const Cell& c) const {
    std::array<double, kMaxGridDim> out{};
    for (int i = 0; i < d_; ++i) out[i] = (static_cast<double>(c[i]) + 0.5) * delta_;
    return out;
}

bool GridSet::disjointFrom(const GridSet& other) const {
    for (const Cell& c : cells_)
        if (other.containsCell(c)) return false;
    return true;
}

namespace {

// 1-d two-branch construction with contraction r, refined until the
// interval length drops below delta, then rasterized to cell indices.
std::vector<std::int32_t> cantorCells1d(double r, int n) {
    const double delta = std::ldexp(1.0, -n);
    std::vector<std::pair<double, double>> level{{0.0, 1.0}};
    while (level.front().second - level.front().first >= delta && r < 1.0) {
        std::vector<std::pair<double, double>> next;
        next.reserve(2 * level.size());
        for (const auto& [a, b] : level) {
            const double len = (b - a) * r;
            next.push_back({a, a + len});
            next.push_back({b - len, b});
        }
        level.swap(next);
        if (level.size() > (1u << 22)) break; // refinement cap
    }
    const std::int32_t lim = std::int32_t(1) << n;
    std::vector<std::int32_t> cells;
    for (const auto& [a, b] : level) {
        const auto lo = static_cast<std::int32_t>(std::floor(a / delta));
        const auto hi = static_cast<std::int32_t>(std::floor(b / delta));
        for (std::int32_t c = std::max(lo, 0); c <= std::min(hi, lim - 1); ++c)
            cells.push_back(c);
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

} // namespace

GridSet cantorSet(double s, int d, int n) {
    if (!(s > 0.0 && s <= 1.0))
        throw PreconditionError("cantorSet: s must lie in (0, 1]");
    const double r = std::pow(2.0, -1.0 / s);
    const auto axis = cantorCells1d(r, n);

    std::vector<Cell> cells;
    if (d == 1) {
        for (auto c : axis) cells.push_back({c, 0, 0});
    } else if (d == 2) {
        for (auto a : axis)
            for (auto b : axis) cells.push_back({a, b, 0});
    } else {
        for (auto a : axis)
            for (auto b : axis)
                for (auto c : axis) cells.push_back({a, b, c});
    }
    return GridSet(d, n, std::move(cells));
}

GridSet latticeNeighborhood(int q, double s, int d, int n) {
    if (q < 2) throw PreconditionError("latticeNeighborhood: q must be >= 2");
    if (!(s > 0.0 && s < static_cast<double>(d)))
        throw PreconditionError("latticeNeighborhood: s must lie in (0, d)");
    const double radius = std::pow(static_cast<double>(q), -static_cast<double>(d) / s);
    const double delta = std::ldexp(1.0, -n);
    if (delta > radius)
        throw ResolutionError("grid does not resolve the neighborhood: 2^-n > q^{-d/s}");

    const std::int32_t lim = std::int32_t(1) << n;
    std::vector<Cell> cells;
    std::array<int, kMaxGridDim> k{};
    const auto minDistSqToCell = [&](const std::array<double, kMaxGridDim>& pt,
                                     const Cell& c) {
        double acc = 0.0;
        for (int i = 0; i < d; ++i) {
            const double lo = c[i] * delta, hi = (c[i] + 1) * delta;
            const double g = pt[i] < lo ? lo - pt[i] : (pt[i] > hi ? pt[i] - hi : 0.0);
            acc += g * g;
        }
        return acc;
    };
    // Enumerate lattice points k/q, k in {0..q}^d, and collect cells
    // whose closed cube meets the closed radius-ball.
    const int total = static_cast<int>(std::pow(q + 1, d));
    for (int flat = 0; flat < total; ++flat) {
        int rest = flat;
        std::array<double, kMaxGridDim> pt{};
        for (int i = 0; i < d; ++i) {
            k[i] = rest % (q + 1);
            rest /= (q + 1);
            pt[i] = static_cast<double>(k[i]) / q;
        }
        Cell lo{}, hi{};
        for (int i = 0; i < d; ++i) {
            lo[i] = std::max<std::int32_t>(
                0, static_cast<std::int32_t>(std::floor((pt[i] - radius) / delta)) - 1);
            hi[i] = std::min<std::int32_t>(
                lim - 1, static_cast<std::int32_t>(std::floor((pt[i] + radius) / delta)) + 1);
        }
        Cell c = lo;
        for (;;) {
            if (minDistSqToCell(pt, c) <= radius * radius) cells.push_back(c);
            int axis = 0;
            while (axis < d && ++c[axis] > hi[axis]) {
                c[axis] = lo[axis];
                ++axis;
            }
            if (axis == d) break;
        }
    }
    return GridSet(d, n, std::move(cells));
}

Separation dyadicSeparation(const GridSet& E) {
    if (E.size() < 2)
        throw DegenerateInputError("dyadicSeparation needs at least 2 cells");
    const int d = E.dim(), n = E.resolution();
    const double delta = E.delta();

    for (int k = 1; k <= n; ++k) {
        const int shift = n - k;
        // cube coordinate of a cell at level k
        auto cubeOf = [&](const Cell& c) {
            Cell q{};
            for (int i = 0; i < d; ++i) q[i] = c[i] >> shift;
            return q;
        };
        std::vector<Cell> cubes;
        for (const Cell& c : E.cells()) cubes.push_back(cubeOf(c));
        std::sort(cubes.begin(), cubes.end());
        cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());

        // first (lex) pair of non-adjacent occupied cubes
        for (std::size_t i = 0; i < cubes.size(); ++i) {
            for (std::size_t j = i + 1; j < cubes.size(); ++j) {
                bool adjacent = true;
                for (int a = 0; a < d; ++a)
                    if (std::abs(cubes[i][a] - cubes[j][a]) > 1) { adjacent = false; break; }
                if (adjacent) continue;

                std::vector<Cell> c1, c2;
                for (const Cell& c : E.cells()) {
                    const Cell q = cubeOf(c);
                    if (q == cubes[i]) c1.push_back(c);
                    else if (q == cubes[j]) c2.push_back(c);
                }
                GridSet g1(d, n, std::move(c1)), g2(d, n, std::move(c2));
                // Euclidean gap between the two cell sets.
                double best = 1e300;
                for (const Cell& a : g1.cells())
                    for (const Cell& b : g2.cells()) {
                        double acc = 0.0;
                        for (int ax = 0; ax < d; ++ax) {
                            const double aLo = a[ax] * delta, aHi = (a[ax] + 1) * delta;
                            const double bLo = b[ax] * delta, bHi = (b[ax] + 1) * delta;
                            const double g = aHi < bLo ? bLo - aHi
                                                       : (bHi < aLo ? aLo - bHi : 0.0);
                            acc += g * g;
                        }
                        best = std::min(best, std::sqrt(acc));
                    }
                return {std::move(g1), std::move(g2), best};
            }
        }
    }
    throw DegenerateInputError(
        "all mass sits in one dyadic cube and its neighbors at every level");
}

void writeGridSet(std::ostream& os, const GridSet& G) {
    os << G.dim() << ' ' << G.resolution() << '\n';
    for (const Cell& c : G.cells()) {
        for (int i = 0; i < G.dim(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << '\n';
    }
}

GridSet readGridSet(std::istream& is) {
    int d = 0, n = 0;
    if (!(is >> d >> n)) throw StructuralError("GridSet header: expected 'd n'");
    std::vector<Cell> cells;
    Cell c{};
    while (true) {
        bool ok = true;
        for (int i = 0; i < d; ++i)
            if (!(is >> c[i])) { ok = false; break; }
        if (!ok) break;
        for (int i = d; i < kMaxGridDim; ++i) c[i] = 0;
        cells.push_back(c);
    }
    return GridSet(d, n, std::move(cells));
}

void saveGridSet(const std::string& path, const GridSet& G) {
    std::ofstream f(path);
    if (!f) throw StructuralError("cannot open for writing: " + path);
    writeGridSet(f, G);
}

GridSet loadGridSet(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw StructuralError("cannot open for reading: " + path);
    return readGridSet(f);
}

} // namespace boxlab::euclid
