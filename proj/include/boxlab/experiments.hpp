#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxlab/result_table.hpp"

namespace boxlab::harness {

struct BoxSweepConfig {
    std::vector<std::uint32_t> primes;
    std::uint32_t d = 1;
    std::vector<std::uint64_t> sizes; // per-prime sizes are clamped to p^d
    int samples = 100;
    std::uint64_t seed = 0;
    bool exhaustive = false; // enumerate all subsets instead of sampling (p^d <= 22)
};

struct BoxSweepResult {
    ResultTable table;
    // Sampled E at or above the sqrt(18) p^{3/4} threshold (d=1,
    // non-vacuous p only) whose box set failed to be complete (all
    // structurally attainable values; see boxSetComplete). This stays 0.
    std::int64_t thresholdViolations = 0;
};

// For each p and size: sample (or enumerate) subsets E of F_p^d, record
// the fraction with a complete box set and the minimal size at which the
// fraction reaches 1. Rows carry the residue class of p mod 4 and a
// vacuous flag for the d=1 threshold.
BoxSweepResult ffBoxThresholdSweep(const BoxSweepConfig& cfg);

struct SharpnessConfig {
    double s = 0.4;
    std::vector<int> qs;
    int d = 1;
    int n = 13;
};

struct SharpnessResult {
    ResultTable table;
    double slope; // fitted log(measure) vs log(q)
};

// Builds the lattice-neighborhood set E_q for each q, splits it into two
// disjoint halves, measures boxSetApprox, and fits the log-log slope.
SharpnessResult sharpnessSweep(const SharpnessConfig& cfg);

// Least-squares slope of log(y) against log(x). Throws on fewer than 3
// pairs or non-positive values.
double scalingFit(const std::vector<std::pair<double, double>>& pairs);

struct TrilinearConfig {
    double s = 0.84;
    int d = 1;
    int n = 12;
    double t = 1.0;
    std::vector<double> epsList;
};

struct TrilinearResult {
    ResultTable table;
    double slope;
};

// Cantor-measure trilinear mass at each eps plus the fitted slope.
TrilinearResult trilinearScan(const TrilinearConfig& cfg);

struct AuditConfig {
    std::vector<std::uint32_t> primes;
    std::vector<std::uint32_t> dims;
    int trials = 1000;
    std::uint64_t seed = 0;
};

struct AuditResult {
    ResultTable table;
    std::int64_t totalViolations = 0;
};

// Runs the four exact inequality checks (Cauchy-Schwarz chain, Weil-
// Salie, D(E) bound, nu^2 inequality) over random sets; one row per
// (inequality, p, d).
AuditResult inequalityAudit(const AuditConfig& cfg);

// Random subset of F_p^d of the given size via seeded Fisher-Yates over
// the index space; sampling without replacement.
namespace detail {
std::vector<std::uint64_t> sampleSubsetIndices(std::uint64_t universe,
                                               std::uint64_t size,
                                               std::uint64_t seed);
}

} // namespace boxlab::harness
