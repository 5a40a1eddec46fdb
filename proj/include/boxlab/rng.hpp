#pragma once

#include <cstdint>
#include <vector>

namespace boxlab {

// splitmix64; used both as a mixer for stream derivation and as the
// generator itself. Cross-platform deterministic, unlike
// std::uniform_int_distribution.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // Warm up so nearby seeds decorrelate.
        (void)splitmix64(state_);
        (void)splitmix64(state_);
    }

    std::uint64_t next() { return splitmix64(state_); }

    // Unbiased draw in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Derive an independent stream from a base seed and a tuple of indices,
// so parallel and serial trial orders produce identical results.
inline std::uint64_t deriveSeed(std::uint64_t base, std::uint64_t a,
                                std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = base;
    (void)splitmix64(s);
    s ^= a * 0x9e3779b97f4a7c15ULL;
    (void)splitmix64(s);
    s ^= b * 0xc2b2ae3d27d4eb4fULL;
    (void)splitmix64(s);
    s ^= c * 0x165667b19e3779f9ULL;
    return splitmix64(s);
}

} // namespace boxlab
