#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <tuple>

#include "boxlab/field.hpp"
#include "boxlab/point_set.hpp"

using namespace boxlab;
using namespace boxlab::ff;

namespace {

// Brute-force O(p^4) enumeration of O_2(F_p); oracle for the
// column-wise construction.
std::vector<OrthMatrix2> orthogonalGroup2Brute(const PrimeModulus& p) {
    std::vector<OrthMatrix2> out;
    for (Scalar a = 0; a < p.p(); ++a)
        for (Scalar b = 0; b < p.p(); ++b)
            for (Scalar c = 0; c < p.p(); ++c)
                for (Scalar d = 0; d < p.p(); ++d) {
                    OrthMatrix2 m{p, a, b, c, d};
                    if (m.isOrthogonal()) out.push_back(m);
                }
    return out;
}

} // namespace

TEST_CASE("prime modulus validation") {
    CHECK(PrimeModulus::of(3).p() == 3);
    CHECK(PrimeModulus::of(331).residueClassMod4() == 3);
    CHECK(PrimeModulus::of(13).residueClassMod4() == 1);
    CHECK_THROWS_AS(PrimeModulus::of(9), StructuralError);
    CHECK_THROWS_AS(PrimeModulus::of(2), StructuralError);
    CHECK_THROWS_AS(PrimeModulus::of(1 << 14), CapacityError);
}

TEST_CASE("norm examples") {
    const auto p5 = PrimeModulus::of(5);
    CHECK(norm(FFVec(p5, {0})) == 0);
    CHECK(norm(FFVec(p5, {1, 2})) == 0); // 1 + 4 = 5

    const auto p7 = PrimeModulus::of(7);
    CHECK(norm(FFVec(p7, {3, 4, 1})) == 26 % 7);
    // naive per-coordinate oracle
    Scalar acc = 0;
    for (Scalar c : {3u, 4u, 1u}) acc = (acc + c * c) % 7;
    CHECK(norm(FFVec(p7, {3, 4, 1})) == acc);
}

TEST_CASE("sphere examples") {
    const auto p3 = PrimeModulus::of(3);
    CHECK(sphere(p3, 1, 0).card() == 1);
    CHECK(sphere(p3, 1, 0).contains(0));

    const auto s = sphere(p3, 2, 1);
    CHECK(s.card() == 4);
    for (auto pt : {std::vector<Scalar>{1, 0}, {2, 0}, {0, 1}, {0, 2}})
        CHECK(s.contains(s.encode(pt)));

    const auto p7 = PrimeModulus::of(7);
    const auto s7 = sphere(p7, 1, 2);
    CHECK(s7.card() == 2);
    CHECK(s7.contains(3));
    CHECK(s7.contains(4));
}

TEST_CASE("sphere partition: sum over t of |S_t| = p^d") {
    for (Scalar p : {3u, 5u, 7u, 11u, 13u, 31u}) {
        const auto mod = PrimeModulus::of(p);
        for (std::uint32_t d = 1; d <= 3; ++d) {
            std::uint64_t total = 0;
            for (Scalar t = 0; t < p; ++t) total += sphere(mod, d, t).card();
            std::uint64_t expect = 1;
            for (std::uint32_t i = 0; i < d; ++i) expect *= p;
            CHECK(total == expect);
        }
    }
}

TEST_CASE("character values") {
    const auto p5 = PrimeModulus::of(5);
    CHECK(character(p5, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(character(p5, 0).imag() == doctest::Approx(0.0).epsilon(1e-12));

    const auto p3 = PrimeModulus::of(3);
    CHECK(character(p3, 1).real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(character(p3, 1).imag() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));

    for (Scalar a = 0; a < 31; ++a)
        CHECK(std::abs(character(PrimeModulus::of(31), a)) ==
              doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("character orthogonality: sum chi(m a) is p or 0") {
    for (Scalar p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        const auto mod = PrimeModulus::of(p);
        const CharacterTable chi(mod);
        for (Scalar m = 0; m < p; ++m) {
            Complex sum = 0;
            for (Scalar a = 0; a < p; ++a) sum += chi(mod.mul(m, a));
            const double expect = (m == 0) ? static_cast<double>(p) : 0.0;
            CHECK(std::abs(sum - expect) < 1e-9);
        }
    }
}

TEST_CASE("orthogonal group sizes") {
    CHECK(orthogonalGroup2(PrimeModulus::of(3)).size() == 8);
    CHECK(orthogonalGroup2(PrimeModulus::of(5)).size() == 8);
    CHECK(orthogonalGroup2(PrimeModulus::of(7)).size() == 16);
}

TEST_CASE("orthogonal group matches brute force and is duplicate-free") {
    for (Scalar pr : {3u, 5u, 7u}) {
        const auto p = PrimeModulus::of(pr);
        auto fast = orthogonalGroup2(p);
        auto brute = orthogonalGroup2Brute(p);
        auto key = [](const OrthMatrix2& m) {
            return std::tuple{m.a, m.b, m.c, m.d};
        };
        std::vector<std::tuple<Scalar, Scalar, Scalar, Scalar>> kf, kb;
        for (auto& m : fast) kf.push_back(key(m));
        for (auto& m : brute) kb.push_back(key(m));
        std::sort(kf.begin(), kf.end());
        std::sort(kb.begin(), kb.end());
        CHECK(std::unique(kf.begin(), kf.end()) == kf.end());
        CHECK(kf == kb);
    }
}

TEST_CASE("group elements preserve the norm (exhaustive p <= 11)") {
    for (Scalar pr : {3u, 5u, 7u, 11u}) {
        const auto p = PrimeModulus::of(pr);
        for (const auto& m : orthogonalGroup2(p)) {
            CHECK(m.isOrthogonal());
            for (Scalar x = 0; x < pr; ++x)
                for (Scalar y = 0; y < pr; ++y) {
                    const auto [u, v] = m.apply(x, y);
                    CHECK(norm(FFVec(p, {u, v})) == norm(FFVec(p, {x, y})));
                }
        }
    }
}

TEST_CASE("group closed under product and inverse (exhaustive p <= 11)") {
    for (Scalar pr : {3u, 5u, 7u, 11u}) {
        const auto p = PrimeModulus::of(pr);
        const auto G = orthogonalGroup2(p);
        auto member = [&](Scalar a, Scalar b, Scalar c, Scalar d) {
            for (const auto& m : G)
                if (m.a == a && m.b == b && m.c == c && m.d == d) return true;
            return false;
        };
        for (const auto& m1 : G) {
            // inverse of an orthogonal matrix is its transpose
            CHECK(member(m1.a, m1.c, m1.b, m1.d));
            for (const auto& m2 : G) {
                const Scalar a = p.add(p.mul(m1.a, m2.a), p.mul(m1.b, m2.c));
                const Scalar b = p.add(p.mul(m1.a, m2.b), p.mul(m1.b, m2.d));
                const Scalar c = p.add(p.mul(m1.c, m2.a), p.mul(m1.d, m2.c));
                const Scalar d = p.add(p.mul(m1.c, m2.b), p.mul(m1.d, m2.d));
                CHECK(member(a, b, c, d));
            }
        }
    }
}
