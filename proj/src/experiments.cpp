#include "boxlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "boxlab/distance.hpp"
#include "boxlab/errors.hpp"
#include "boxlab/euclid_sets.hpp"
#include "boxlab/rng.hpp"
#include "boxlab/spectral.hpp"

namespace boxlab::harness {

using ff::PointSet;
using ff::PrimeModulus;
using ff::Scalar;

namespace detail {

std::vector<std::uint64_t> sampleSubsetIndices(std::uint64_t universe,
                                               std::uint64_t size,
                                               std::uint64_t seed) {
    if (size > universe)
        throw ConfigError("sample size exceeds universe");
    std::vector<std::uint64_t> pool(universe);
    std::iota(pool.begin(), pool.end(), 0);
    Rng rng(seed);
    for (std::uint64_t i = 0; i < size; ++i) {
        const std::uint64_t j = i + rng.below(universe - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    return pool;
}

} // namespace detail

namespace {

PointSet randomSubset(const PrimeModulus& p, std::uint32_t d, std::uint64_t size,
                      std::uint64_t seed) {
    PointSet E(p, d);
    for (std::uint64_t idx : detail::sampleSubsetIndices(E.universe(), size, seed))
        E.insert(idx);
    return E;
}

double boxThreshold(std::uint32_t p) {
    return std::sqrt(18.0) * std::pow(static_cast<double>(p), 0.75);
}

} // namespace

BoxSweepResult ffBoxThresholdSweep(const BoxSweepConfig& cfg) {
    if (cfg.primes.empty()) throw ConfigError("box sweep: no primes configured");
    if (!cfg.exhaustive && cfg.samples < 1)
        throw ConfigError("box sweep: sample count must be >= 1");

    std::ostringstream canon;
    canon << "box-sweep;d=" << cfg.d << ";samples=" << cfg.samples
          << ";exhaustive=" << cfg.exhaustive << ";primes=";
    for (auto p : cfg.primes) canon << p << ',';
    canon << ";sizes=";
    for (auto m : cfg.sizes) canon << m << ',';

    ResultTable table({"p", "residue_mod4", "d", "size", "samples", "full_count",
                       "full_fraction", "threshold", "vacuous", "min_full_size"});
    std::int64_t violations = 0;

    for (std::uint32_t pRaw : cfg.primes) {
        const PrimeModulus p = PrimeModulus::of(pRaw);
        const double thr = boxThreshold(pRaw);
        const std::uint64_t universe = PointSet(p, cfg.d).universe();
        const bool vacuous = cfg.d != 1 || thr > static_cast<double>(universe);

        std::vector<std::uint64_t> sizes;
        struct SizeStat { std::uint64_t size; std::int64_t total = 0, full = 0; };
        std::vector<SizeStat> stats;

        if (cfg.exhaustive) {
            if (universe > 22)
                throw ConfigError("exhaustive box sweep needs p^d <= 22");
            stats.resize(universe + 1);
            for (std::uint64_t m = 0; m <= universe; ++m) stats[m].size = m;
            for (std::uint64_t mask = 0; mask < (1ULL << universe); ++mask) {
                PointSet E(p, cfg.d);
                for (std::uint64_t i = 0; i < universe; ++i)
                    if (mask & (1ULL << i)) E.insert(i);
                auto& st = stats[E.card()];
                ++st.total;
                if (ff::boxSetComplete(ff::boxSet(E), cfg.d)) ++st.full;
            }
        } else {
            for (std::uint64_t m : cfg.sizes)
                if (m <= universe) sizes.push_back(m);
            std::sort(sizes.begin(), sizes.end());
            for (std::uint64_t m : sizes) {
                SizeStat st{m, 0, 0};
                for (int sample = 0; sample < cfg.samples; ++sample) {
                    const std::uint64_t s = deriveSeed(cfg.seed, pRaw, m,
                                                       static_cast<std::uint64_t>(sample));
                    const PointSet E = randomSubset(p, cfg.d, m, s);
                    const bool full = ff::boxSetComplete(ff::boxSet(E), cfg.d);
                    ++st.total;
                    if (full) ++st.full;
                    if (!full && !vacuous && static_cast<double>(m) > thr) ++violations;
                }
                stats.push_back(st);
            }
        }

        // minimal size from which every recorded fraction is 1
        std::int64_t minFull = -1;
        for (auto it = stats.rbegin(); it != stats.rend(); ++it) {
            if (it->total > 0 && it->full == it->total)
                minFull = static_cast<std::int64_t>(it->size);
            else if (it->total > 0)
                break;
        }

        for (const auto& st : stats) {
            if (st.total == 0) continue;
            table.addRow({formatInt(pRaw), formatInt(p.residueClassMod4()),
                          formatInt(cfg.d), formatInt(static_cast<std::int64_t>(st.size)),
                          formatInt(st.total), formatInt(st.full),
                          formatDouble(static_cast<double>(st.full) /
                                       static_cast<double>(st.total)),
                          formatDouble(thr), vacuous ? "1" : "0", formatInt(minFull)});
        }
    }
    table.setProvenance(hashConfig(canon.str()), cfg.seed);
    return {std::move(table), violations};
}

double scalingFit(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 3)
        throw ConfigError("scalingFit needs at least 3 pairs");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pairs) {
        if (x <= 0.0 || y <= 0.0)
            throw ConfigError("scalingFit needs positive values");
        const double lx = std::log(x), ly = std::log(y);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    const double n = static_cast<double>(pairs.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

SharpnessResult sharpnessSweep(const SharpnessConfig& cfg) {
    if (cfg.qs.empty()) throw ConfigError("sharpness sweep: no q values");
    using namespace boxlab::euclid;

    std::ostringstream canon;
    canon << "sharpness;s=" << cfg.s << ";d=" << cfg.d << ";n=" << cfg.n << ";qs=";
    for (int q : cfg.qs) canon << q << ',';

    ResultTable table({"q", "n", "cells", "box_measure"});
    std::vector<std::pair<double, double>> pairs;
    for (int q : cfg.qs) {
        // Coarsest resolution that still resolves the q^{-d/s} radius:
        // keeps the O(|cells|^3) kernel tractable across the whole q range.
        const double need =
            static_cast<double>(cfg.d) / cfg.s * std::log2(static_cast<double>(q));
        const int nq = std::max(1, static_cast<int>(std::ceil(need - 1e-9)));
        if (nq > cfg.n)
            throw ResolutionError(
                "sharpness sweep: configured resolution cap cannot resolve q");
        const GridSet Eq = latticeNeighborhood(q, cfg.s, cfg.d, nq);
        // disjoint halves by alternating cells (deterministic)
        std::vector<Cell> c1, c2;
        for (std::size_t i = 0; i < Eq.size(); ++i)
            (i % 2 == 0 ? c1 : c2).push_back(Eq.cells()[i]);
        const GridSet E1(cfg.d, nq, std::move(c1));
        const GridSet E2(cfg.d, nq, std::move(c2));
        const double measure = boxSetApprox(Eq, E1, E2).measure();
        table.addRow({formatInt(q), formatInt(nq),
                      formatInt(static_cast<std::int64_t>(Eq.size())),
                      formatDouble(measure)});
        pairs.push_back({static_cast<double>(q), measure});
    }
    const double slope = scalingFit(pairs);
    table.setProvenance(hashConfig(canon.str()), 0);
    return {std::move(table), slope};
}

TrilinearResult trilinearScan(const TrilinearConfig& cfg) {
    if (cfg.epsList.empty()) throw ConfigError("trilinear scan: no eps values");
    using namespace boxlab::euclid;

    std::ostringstream canon;
    canon << "trilinear;s=" << cfg.s << ";d=" << cfg.d << ";n=" << cfg.n
          << ";t=" << cfg.t << ";eps=";
    for (double e : cfg.epsList) canon << e << ',';

    const GridSet E = cantorSet(cfg.s, cfg.d, cfg.n);
    const DiscreteMeasure mu{E};
    ResultTable table({"eps", "mass"});
    std::vector<std::pair<double, double>> pairs;
    for (double eps : cfg.epsList) {
        const double mass = trilinearMass(mu, mu, mu, cfg.t, eps);
        table.addRow({formatDouble(eps), formatDouble(mass)});
        pairs.push_back({eps, mass});
    }
    const double slope = scalingFit(pairs);
    table.setProvenance(hashConfig(canon.str()), 0);
    return {std::move(table), slope};
}

AuditResult inequalityAudit(const AuditConfig& cfg) {
    if (cfg.primes.empty() || cfg.dims.empty())
        throw ConfigError("audit: primes and dims must be nonempty");
    if (cfg.trials < 0) throw ConfigError("audit: negative trial count");

    std::ostringstream canon;
    canon << "audit;trials=" << cfg.trials << ";primes=";
    for (auto p : cfg.primes) canon << p << ',';
    canon << ";dims=";
    for (auto d : cfg.dims) canon << d << ',';

    ResultTable table({"inequality", "p", "d", "trials", "violations", "max_ratio"});
    std::int64_t totalViolations = 0;

    const auto addRow = [&](const char* name, std::uint32_t p, std::uint32_t d,
                            std::int64_t trials, std::int64_t viol, double ratio) {
        table.addRow({name, formatInt(p), formatInt(d), formatInt(trials),
                      formatInt(viol), formatDouble(ratio)});
        totalViolations += viol;
    };

    for (std::uint32_t pRaw : cfg.primes) {
        const PrimeModulus p = PrimeModulus::of(pRaw);
        for (std::uint32_t d : cfg.dims) {
            if (cfg.trials == 0) continue;
            const std::uint64_t universe = PointSet(p, d).universe();
            const std::uint64_t maxSize = std::min<std::uint64_t>(universe, 64);

            // Cauchy-Schwarz chain: |E|^2 <= |Delta_x(E)| * sum nu_x^2
            {
                std::int64_t viol = 0;
                for (int trial = 0; trial < cfg.trials; ++trial) {
                    const std::uint64_t seed = deriveSeed(cfg.seed, 1, pRaw * 8 + d, trial);
                    Rng szRng(seed);
                    const std::uint64_t m = 2 + szRng.below(maxSize - 1);
                    const PointSet E = randomSubset(p, d, m, seed + 1);
                    for (std::uint64_t idx : E.indices()) {
                        const ff::FFVec x(p, E.decode(idx));
                        const auto nu = ff::countingFunction(E, x);
                        ff::int128 sumSq = 0;
                        for (Scalar t = 0; t < pRaw; ++t)
                            sumSq += static_cast<ff::int128>(nu[t]) * nu[t];
                        const ff::int128 lhs =
                            static_cast<ff::int128>(E.card()) * E.card();
                        const ff::int128 rhs =
                            static_cast<ff::int128>(
                                ff::pinnedDistanceSet(E, x).card()) * sumSq;
                        if (lhs > rhs) ++viol;
                    }
                }
                addRow("cauchy_schwarz", pRaw, d, cfg.trials, viol, 0.0);
            }

            // Sphere-transform bound (d = 2 only): exhaustive over t != 0,
            // the regime the bound is stated for.
            if (d == 2) {
                double maxRatio = 0.0;
                std::int64_t viol = 0;
                const double bound = ff::weilSalieBound(p);
                for (Scalar t = 1; t < pRaw; ++t) {
                    const double ratio = ff::sphereFourierMax(p, 2, t) / bound;
                    maxRatio = std::max(maxRatio, ratio);
                    if (ratio > 1.0 + 1e-12) ++viol;
                }
                addRow("weil_salie", pRaw, d, pRaw - 1, viol, maxRatio);
            }

            // D(E) bound: asserted for d >= 2, report-only for d = 1
            {
                std::int64_t viol = 0;
                double maxRatio = 0.0;
                for (int trial = 0; trial < cfg.trials; ++trial) {
                    const std::uint64_t seed = deriveSeed(cfg.seed, 2, pRaw * 8 + d, trial);
                    Rng szRng(seed);
                    const std::uint64_t m = 1 + szRng.below(maxSize);
                    const PointSet E = randomSubset(p, d, m, seed + 1);
                    for (Scalar t = 0; t < pRaw; ++t) {
                        const auto rep = ff::errorTermD(E, t);
                        if (rep.bound > 0.0)
                            maxRatio = std::max(maxRatio, std::abs(rep.D) / rep.bound);
                        if (d >= 2 && !rep.satisfied) ++viol;
                    }
                }
                addRow(d >= 2 ? "d_bound" : "d_bound_report", pRaw, d, cfg.trials,
                       viol, maxRatio);
            }

            // nu^2 inequality (d = 2 only)
            if (d == 2) {
                std::int64_t viol = 0;
                for (int trial = 0; trial < cfg.trials; ++trial) {
                    const std::uint64_t seed = deriveSeed(cfg.seed, 3, pRaw * 8 + d, trial);
                    Rng szRng(seed);
                    const std::uint64_t ma = 1 + szRng.below(maxSize);
                    const std::uint64_t mb = 1 + szRng.below(maxSize);
                    const PointSet A = randomSubset(p, 2, ma, seed + 1);
                    const PointSet B = randomSubset(p, 2, mb, seed + 2);
                    if (!ff::nuSquareInequality(A, B).satisfied) ++viol;
                }
                addRow("nu2", pRaw, d, cfg.trials, viol, 0.0);
            }
        }
    }
    table.setProvenance(hashConfig(canon.str()), cfg.seed);
    return {std::move(table), totalViolations};
}

} // namespace boxlab::harness
