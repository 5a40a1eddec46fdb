#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "boxlab/field.hpp"

namespace boxlab::ff {

// Dense subset of F_p^d. Points are indexed by the mixed-radix encoding
// idx = sum_i coords[i] * p^i (coordinate 0 least significant); the
// encoding is bijective with F_p^d.
class PointSet {
public:
    PointSet(PrimeModulus p, std::uint32_t d);

    PrimeModulus modulus() const { return p_; }
    std::uint32_t dim() const { return d_; }
    std::uint64_t universe() const { return universe_; } // p^d
    std::uint64_t card() const { return card_; }
    bool empty() const { return card_ == 0; }

    bool contains(std::uint64_t idx) const {
        return (bits_[idx >> 6] >> (idx & 63)) & 1ULL;
    }
    void insert(std::uint64_t idx);
    void erase(std::uint64_t idx);

    std::uint64_t encode(const std::vector<Scalar>& coords) const;
    std::vector<Scalar> decode(std::uint64_t idx) const;

    void insertPoint(const std::vector<Scalar>& coords) { insert(encode(coords)); }

    // Materialized sorted index list (ascending).
    std::vector<std::uint64_t> indices() const;

    // Flat row-major coordinate matrix of the members, |E| x d, in
    // ascending index order. This is the layout the kernels iterate.
    std::vector<Scalar> coordMatrix() const;

    bool operator==(const PointSet& other) const;

private:
    PrimeModulus p_;
    std::uint32_t d_;
    std::uint64_t universe_;
    std::uint64_t card_;
    std::vector<std::uint64_t> bits_;
};

// Dense subset of the scalar field F_p.
class ScalarSet {
public:
    explicit ScalarSet(PrimeModulus p);

    PrimeModulus modulus() const { return p_; }
    std::uint64_t card() const { return card_; }
    bool empty() const { return card_ == 0; }
    bool full() const { return card_ == p_.p(); }

    bool contains(Scalar t) const { return (bits_[t >> 6] >> (t & 63)) & 1ULL; }
    void insert(Scalar t);

    std::vector<Scalar> values() const;

    bool operator==(const ScalarSet& other) const;
    bool isSubsetOf(const ScalarSet& other) const;

private:
    PrimeModulus p_;
    std::uint64_t card_;
    std::vector<std::uint64_t> bits_;
};

// Integer counts indexed by a field scalar t.
class Histogram {
public:
    explicit Histogram(PrimeModulus p);

    PrimeModulus modulus() const { return p_; }
    std::int64_t operator[](Scalar t) const { return counts_[t]; }
    std::int64_t& at(Scalar t) { return counts_[t]; }
    std::int64_t total() const;
    ScalarSet support() const;

private:
    PrimeModulus p_;
    std::vector<std::int64_t> counts_;
};

// {x in F_p^d : ||x|| = t}, cardinality cached by the PointSet.
PointSet sphere(const PrimeModulus& p, std::uint32_t d, Scalar t);

// Line-oriented text format: header "p d card", then one point per line
// as space-separated coordinates. Round-trips bit-exactly.
void writePointSet(std::ostream& os, const PointSet& E);
PointSet readPointSet(std::istream& is);
void savePointSet(const std::string& path, const PointSet& E);
PointSet loadPointSet(const std::string& path);

} // namespace boxlab::ff
