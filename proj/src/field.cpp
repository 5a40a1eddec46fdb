#include "boxlab/field.hpp"

#include <cmath>
#include <numbers>

namespace boxlab::ff {

bool isOddPrime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t f = 3; f * f <= p; f += 2)
        if (p % f == 0) return false;
    return true;
}

PrimeModulus PrimeModulus::of(std::uint64_t p) {
    if (p > kMaxPrime)
        throw CapacityError("prime modulus exceeds cap 2^13: " + std::to_string(p));
    if (!isOddPrime(p))
        throw StructuralError("not an odd prime: " + std::to_string(p));
    return PrimeModulus(static_cast<Scalar>(p));
}

FFVec::FFVec(PrimeModulus mod, std::vector<Scalar> c) : p(mod), coords(std::move(c)) {
    if (coords.empty())
        throw StructuralError("FFVec needs dimension >= 1");
    for (Scalar& v : coords)
        if (v >= p.p())
            throw StructuralError("FFVec coordinate out of [0, p)");
}

Scalar norm(const FFVec& v) {
    Scalar acc = 0;
    for (Scalar c : v.coords) acc = v.p.add(acc, v.p.sq(c));
    return acc;
}

Complex character(const PrimeModulus& p, Scalar a) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(a) /
                         static_cast<double>(p.p());
    return {std::cos(angle), std::sin(angle)};
}

CharacterTable::CharacterTable(const PrimeModulus& p) : p_(p.p()) {
    roots_.reserve(p_);
    for (Scalar a = 0; a < p_; ++a) roots_.push_back(character(p, a));
}

bool OrthMatrix2::isOrthogonal() const {
    // M^T M = I: four scalar congruences.
    return p.add(p.sq(a), p.sq(c)) == 1 &&
           p.add(p.sq(b), p.sq(d)) == 1 &&
           p.add(p.mul(a, b), p.mul(c, d)) == 0;
}

std::pair<Scalar, Scalar> OrthMatrix2::apply(Scalar x, Scalar y) const {
    return {p.add(p.mul(a, x), p.mul(b, y)), p.add(p.mul(c, x), p.mul(d, y))};
}

std::vector<OrthMatrix2> orthogonalGroup2(const PrimeModulus& p) {
    const Scalar q = p.p();
    // sqrtsOf[s] = all c with c^2 = s.
    std::vector<std::vector<Scalar>> sqrtsOf(q);
    for (Scalar c = 0; c < q; ++c) sqrtsOf[p.sq(c)].push_back(c);

    std::vector<OrthMatrix2> out;
    for (Scalar a = 0; a < q; ++a) {
        const Scalar need = p.sub(1, p.sq(a));
        for (Scalar c : sqrtsOf[need]) {
            // Second column orthogonal to (a, c) on the unit circle:
            // (b, d) = +-(-c, a).
            out.push_back({p, a, p.neg(c), c, a});
            out.push_back({p, a, c, c, p.neg(a)});
        }
    }
    return out;
}

} // namespace boxlab::ff
