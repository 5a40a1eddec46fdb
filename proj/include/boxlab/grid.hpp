#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace boxlab::euclid {

inline constexpr int kMaxGridDim = 3;

// Integer cell coordinates; coordinates beyond the active dimension are 0.
using Cell = std::array<std::int32_t, kMaxGridDim>;

// A delta-resolution subset of [0,1]^d: the union of closed cells
// [c*delta, (c+1)*delta]^d with delta = 2^-n. Cells are kept sorted and
// duplicate-free.
class GridSet {
public:
    GridSet(int d, int n);
    GridSet(int d, int n, std::vector<Cell> cells);

    int dim() const { return d_; }
    int resolution() const { return n_; }
    double delta() const { return delta_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool containsCell(const Cell& c) const;
    void insert(const Cell& c);

    // Center of a cell as a point in [0,1]^d.
    std::array<double, kMaxGridDim> center(const Cell& c) const;

    // Cells of *this that also/never appear in other.
    bool disjointFrom(const GridSet& other) const;

    bool operator==(const GridSet&) const = default;

private:
    int d_;
    int n_;
    double delta_;
    std::vector<Cell> cells_;
    void normalize();
};

// d-fold product of a two-branch self-similar set with contraction
// r = 2^{-1/s} (so its similarity dimension is s per coordinate),
// refined until the feature size drops below the cell side and then
// rasterized. s = 1 gives the full cube.
GridSet cantorSet(double s, int d, int n);

// All cells meeting the closed q^{-d/s}-ball neighborhood of the scaled
// lattice {k/q : k in Z^d n [0,q]^d}. Requires 2^-n <= q^{-d/s}.
GridSet latticeNeighborhood(int q, double s, int d, int n);

struct Separation {
    GridSet first;
    GridSet second;
    double separation; // Euclidean gap between the two cell sets
};

// Scans dyadic levels k = 1..n for two nonempty non-adjacent cubes; at
// the smallest such level returns the cells inside each cube. Throws
// DegenerateInputError when no level separates the set.
Separation dyadicSeparation(const GridSet& E);

// Uniform probability measure on the cells of a GridSet.
struct DiscreteMeasure {
    GridSet support;
    double cellWeight() const {
        return support.empty() ? 0.0 : 1.0 / static_cast<double>(support.size());
    }
};

// Serialization: header "d n", one cell per line.
void writeGridSet(std::ostream& os, const GridSet& G);
GridSet readGridSet(std::istream& is);
void saveGridSet(const std::string& path, const GridSet& G);
GridSet loadGridSet(const std::string& path);

} // namespace boxlab::euclid
