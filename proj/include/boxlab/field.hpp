#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "boxlab/errors.hpp"

namespace boxlab::ff {

using Scalar = std::uint32_t;
using Complex = std::complex<double>;

// Hard cap: p^d must fit a dense bit array (< 8 MiB of bits).
inline constexpr std::uint64_t kCapacityCap = 1ULL << 26;
inline constexpr Scalar kMaxPrime = 1u << 13;

// An odd prime modulus 3 <= p <= 2^13, with its residue class mod 4.
// The d=1 box theorem proof in the source material is written for
// p = 3 mod 4; experiment outputs are tagged with the residue class so
// the two regimes can be told apart downstream.
class PrimeModulus {
public:
    static PrimeModulus of(std::uint64_t p);

    Scalar p() const { return p_; }
    int residueClassMod4() const { return static_cast<int>(p_ % 4); }

    Scalar add(Scalar a, Scalar b) const { Scalar s = a + b; return s >= p_ ? s - p_ : s; }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar sq(Scalar a) const { return mul(a, a); }

    friend bool operator==(const PrimeModulus& x, const PrimeModulus& y) { return x.p_ == y.p_; }

private:
    explicit PrimeModulus(Scalar p) : p_(p) {}
    Scalar p_;
};

// Deterministic primality by trial division (p <= 2^13, so this is instant).
bool isOddPrime(std::uint64_t p);

// A vector in F_p^d, coordinates reduced to [0, p).
struct FFVec {
    PrimeModulus p;
    std::vector<Scalar> coords;

    FFVec(PrimeModulus mod, std::vector<Scalar> c);
    std::size_t dim() const { return coords.size(); }
};

// ||v|| = v_1^2 + ... + v_d^2 mod p.
Scalar norm(const FFVec& v);

// Additive character chi(a) = exp(2*pi*i*a/p).
Complex character(const PrimeModulus& p, Scalar a);

// Precomputed p-th roots of unity: root(a) = chi(a).
class CharacterTable {
public:
    explicit CharacterTable(const PrimeModulus& p);
    const Complex& operator()(Scalar a) const { return roots_[a]; }
    Scalar p() const { return p_; }

private:
    Scalar p_;
    std::vector<Complex> roots_;
};

// 2x2 matrix M over F_p with M^T M = I.
struct OrthMatrix2 {
    PrimeModulus p;
    Scalar a, b, c, d; // [[a, b], [c, d]]

    bool isOrthogonal() const;
    // M * (x, y)
    std::pair<Scalar, Scalar> apply(Scalar x, Scalar y) const;
};

// Complete duplicate-free enumeration of O_2(F_p). Built column-wise:
// first column runs over the unit circle a^2 + c^2 = 1, second column is
// +-(-c, a). Size is 2(p+1) for p = 3 mod 4 and 2(p-1) for p = 1 mod 4.
std::vector<OrthMatrix2> orthogonalGroup2(const PrimeModulus& p);

} // namespace boxlab::ff
