#include "boxlab/point_set.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace boxlab::ff {

namespace {
std::uint64_t powCapped(Scalar p, std::uint32_t d) {
    std::uint64_t u = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        u *= p;
        if (u > kCapacityCap)
            throw CapacityError("p^d exceeds capacity cap 2^26 (p=" + std::to_string(p) +
                                ", d=" + std::to_string(d) + ")");
    }
    return u;
}
} // namespace

PointSet::PointSet(PrimeModulus p, std::uint32_t d)
    : p_(p), d_(d), universe_(0), card_(0) {
    if (d == 0) throw StructuralError("PointSet dimension must be >= 1");
    universe_ = powCapped(p.p(), d);
    bits_.assign((universe_ + 63) / 64, 0);
}

void PointSet::insert(std::uint64_t idx) {
    std::uint64_t& w = bits_[idx >> 6];
    const std::uint64_t m = 1ULL << (idx & 63);
    if (!(w & m)) { w |= m; ++card_; }
}

void PointSet::erase(std::uint64_t idx) {
    std::uint64_t& w = bits_[idx >> 6];
    const std::uint64_t m = 1ULL << (idx & 63);
    if (w & m) { w &= ~m; --card_; }
}

std::uint64_t PointSet::encode(const std::vector<Scalar>& coords) const {
    if (coords.size() != d_) throw StructuralError("coordinate count != dimension");
    std::uint64_t idx = 0;
    for (std::uint32_t i = d_; i-- > 0;) {
        if (coords[i] >= p_.p()) throw StructuralError("coordinate out of [0, p)");
        idx = idx * p_.p() + coords[i];
    }
    return idx;
}

std::vector<Scalar> PointSet::decode(std::uint64_t idx) const {
    std::vector<Scalar> coords(d_);
    for (std::uint32_t i = 0; i < d_; ++i) {
        coords[i] = static_cast<Scalar>(idx % p_.p());
        idx /= p_.p();
    }
    return coords;
}

std::vector<std::uint64_t> PointSet::indices() const {
    std::vector<std::uint64_t> out;
    out.reserve(card_);
    for (std::uint64_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            const int b = __builtin_ctzll(word);
            out.push_back((w << 6) | static_cast<unsigned>(b));
            word &= word - 1;
        }
    }
    return out;
}

std::vector<Scalar> PointSet::coordMatrix() const {
    std::vector<Scalar> out;
    out.reserve(card_ * d_);
    for (std::uint64_t idx : indices()) {
        std::uint64_t rest = idx;
        for (std::uint32_t i = 0; i < d_; ++i) {
            out.push_back(static_cast<Scalar>(rest % p_.p()));
            rest /= p_.p();
        }
    }
    return out;
}

bool PointSet::operator==(const PointSet& other) const {
    return p_ == other.p_ && d_ == other.d_ && bits_ == other.bits_;
}

ScalarSet::ScalarSet(PrimeModulus p) : p_(p), card_(0) {
    bits_.assign((p.p() + 63) / 64, 0);
}

void ScalarSet::insert(Scalar t) {
    std::uint64_t& w = bits_[t >> 6];
    const std::uint64_t m = 1ULL << (t & 63);
    if (!(w & m)) { w |= m; ++card_; }
}

std::vector<Scalar> ScalarSet::values() const {
    std::vector<Scalar> out;
    out.reserve(card_);
    for (Scalar t = 0; t < p_.p(); ++t)
        if (contains(t)) out.push_back(t);
    return out;
}

bool ScalarSet::operator==(const ScalarSet& other) const {
    return p_ == other.p_ && bits_ == other.bits_;
}

bool ScalarSet::isSubsetOf(const ScalarSet& other) const {
    if (!(p_ == other.p_)) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

Histogram::Histogram(PrimeModulus p) : p_(p), counts_(p.p(), 0) {}

std::int64_t Histogram::total() const {
    std::int64_t s = 0;
    for (std::int64_t c : counts_) s += c;
    return s;
}

ScalarSet Histogram::support() const {
    ScalarSet out(p_);
    for (Scalar t = 0; t < p_.p(); ++t)
        if (counts_[t] > 0) out.insert(t);
    return out;
}

PointSet sphere(const PrimeModulus& p, std::uint32_t d, Scalar t) {
    if (t >= p.p()) throw StructuralError("sphere radius t out of [0, p)");
    PointSet S(p, d);
    std::vector<Scalar> sq(p.p());
    for (Scalar v = 0; v < p.p(); ++v) sq[v] = p.sq(v);

    // Walk the mixed-radix index space keeping a running norm.
    std::vector<Scalar> coords(d, 0);
    Scalar running = 0; // norm of current coords
    const std::uint64_t universe = S.universe();
    for (std::uint64_t idx = 0; idx < universe; ++idx) {
        if (running == t) S.insert(idx);
        // increment coords with carry, updating the norm
        for (std::uint32_t i = 0; i < d; ++i) {
            running = p.sub(running, sq[coords[i]]);
            if (++coords[i] == p.p()) {
                coords[i] = 0;
            } else {
                running = p.add(running, sq[coords[i]]);
                break;
            }
        }
    }
    return S;
}

void writePointSet(std::ostream& os, const PointSet& E) {
    os << E.modulus().p() << ' ' << E.dim() << ' ' << E.card() << '\n';
    for (std::uint64_t idx : E.indices()) {
        const auto coords = E.decode(idx);
        for (std::uint32_t i = 0; i < E.dim(); ++i) {
            if (i) os << ' ';
            os << coords[i];
        }
        os << '\n';
    }
}

PointSet readPointSet(std::istream& is) {
    std::uint64_t p = 0, d = 0, card = 0;
    if (!(is >> p >> d >> card))
        throw StructuralError("PointSet header: expected 'p d card'");
    PointSet E(PrimeModulus::of(p), static_cast<std::uint32_t>(d));
    std::vector<Scalar> coords(d);
    for (std::uint64_t r = 0; r < card; ++r) {
        for (auto& c : coords) {
            std::uint64_t v;
            if (!(is >> v)) throw StructuralError("PointSet body: truncated point list");
            if (v >= p) throw StructuralError("PointSet body: coordinate out of [0, p)");
            c = static_cast<Scalar>(v);
        }
        E.insertPoint(coords);
    }
    if (E.card() != card)
        throw StructuralError("PointSet body: duplicate points (card mismatch)");
    return E;
}

void savePointSet(const std::string& path, const PointSet& E) {
    std::ofstream f(path);
    if (!f) throw StructuralError("cannot open for writing: " + path);
    writePointSet(f, E);
}

PointSet loadPointSet(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw StructuralError("cannot open for reading: " + path);
    return readPointSet(f);
}

} // namespace boxlab::ff
