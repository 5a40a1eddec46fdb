// boxlab: experiments on finite-field box/distance sets and their
// discretized Euclidean counterparts.
//
// Subcommands:
//   ff     box-sweep | dist | box | weil | hinge | nu2 | audit
//   euclid cantor | lattice | boxset | chains | perimeter | trilinear | sharpness
//
// One-shots print compact JSON to stdout when --out is absent. Exit
// codes: 0 success, 1 a mathematical check failed, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "boxlab/distance.hpp"
#include "boxlab/errors.hpp"
#include "boxlab/euclid_sets.hpp"
#include "boxlab/experiments.hpp"
#include "boxlab/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using json = nlohmann::json;
namespace ff = boxlab::ff;
namespace eu = boxlab::euclid;
namespace hn = boxlab::harness;

namespace {

int g_exitCode = 0; // set to 1 when a mathematical check fails

void emit(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content << '\n';
    } else {
        std::ofstream f(out);
        if (!f) throw boxlab::ConfigError("cannot open output file: " + out);
        f << content;
    }
}

void emitTable(const std::string& out, const hn::ResultTable& table) {
    if (out.empty()) {
        std::cout << table.toJson() << '\n';
    } else {
        std::ofstream f(out);
        if (!f) throw boxlab::ConfigError("cannot open output file: " + out);
        table.writeCsv(f);
    }
}

json scalarSetJson(const ff::ScalarSet& s) {
    json vals = json::array();
    for (auto t : s.values()) vals.push_back(t);
    return {{"p", s.modulus().p()}, {"card", s.card()}, {"values", vals}};
}

json intervalUnionJson(const eu::IntervalUnion& u) {
    json comps = json::array();
    for (const auto& c : u.components()) comps.push_back({c.lo, c.hi});
    return {{"measure", u.measure()}, {"components", comps}};
}

std::vector<double> parseEpsList(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

eu::Point parsePoint(const std::string& s, int d) {
    eu::Point x{};
    std::stringstream ss(s);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= d) throw boxlab::ConfigError("pin point has too many coordinates");
        x[i++] = std::stod(item);
    }
    if (i != d) throw boxlab::ConfigError("pin point has too few coordinates");
    return x;
}

// "a:b" inclusive range or "a,b,c" list
std::vector<std::uint64_t> parseSizes(const std::string& s) {
    std::vector<std::uint64_t> out;
    if (const auto colon = s.find(':'); colon != std::string::npos) {
        const auto lo = std::stoull(s.substr(0, colon));
        const auto hi = std::stoull(s.substr(colon + 1));
        for (auto m = lo; m <= hi; ++m) out.push_back(m);
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"boxlab: finite-field and discretized-Euclidean distance/box set lab"};
    app.set_config("--config", "", "flat key=value config file (flags win on conflict)");
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (default: hardware)");

    // ---- ff group ----
    auto* ffCmd = app.add_subcommand("ff", "finite-field experiments");
    ffCmd->require_subcommand(1);

    struct {
        std::vector<std::uint32_t> primes{331};
        std::string sizes = "328:332";
        int samples = 100;
        std::uint64_t seed = 0;
        bool exhaustive = false;
        std::uint32_t d = 1;
        std::string out;
    } sweep;
    auto* sweepCmd = ffCmd->add_subcommand("box-sweep", "Box(E)=F_p threshold sweep");
    sweepCmd->add_option("--p", sweep.primes, "odd primes");
    sweepCmd->add_option("--sizes", sweep.sizes, "size range a:b or list a,b,c");
    sweepCmd->add_option("--samples", sweep.samples, "samples per size");
    sweepCmd->add_option("--seed", sweep.seed, "RNG seed");
    sweepCmd->add_option("--d", sweep.d, "dimension");
    sweepCmd->add_flag("--exhaustive", sweep.exhaustive, "enumerate all subsets");
    sweepCmd->add_option("--out", sweep.out, "CSV output path");

    struct { std::string in, out; } dist;
    auto* distCmd = ffCmd->add_subcommand("dist", "distance set of a point set file");
    distCmd->add_option("--in", dist.in, "PointSet file")->required();
    distCmd->add_option("--out", dist.out, "output path");

    struct { std::string in, out; } box;
    auto* boxCmd = ffCmd->add_subcommand("box", "box set of a point set file");
    boxCmd->add_option("--in", box.in, "PointSet file")->required();
    boxCmd->add_option("--out", box.out, "output path");

    struct { std::uint32_t p = 31; std::string out; } weil;
    auto* weilCmd = ffCmd->add_subcommand("weil", "Weil-Salie sphere transform check (d=2)");
    weilCmd->add_option("--p", weil.p, "odd prime");
    weilCmd->add_option("--out", weil.out, "output path");

    struct { std::string in; std::uint32_t t = 0; std::string out; } hinge;
    auto* hingeCmd = ffCmd->add_subcommand("hinge", "hinge count and D(E) report");
    hingeCmd->add_option("--in", hinge.in, "PointSet file")->required();
    hingeCmd->add_option("--t", hinge.t, "distance value t");
    hingeCmd->add_option("--out", hinge.out, "output path");

    struct { std::string inA, inB, out; } nu2;
    auto* nu2Cmd = ffCmd->add_subcommand("nu2", "nu^2 inequality for a pair A, B in F_p^2");
    nu2Cmd->add_option("--inA", nu2.inA, "PointSet file for A")->required();
    nu2Cmd->add_option("--inB", nu2.inB, "PointSet file for B")->required();
    nu2Cmd->add_option("--out", nu2.out, "output path");

    struct {
        std::vector<std::uint32_t> primes{7, 11, 13};
        std::vector<std::uint32_t> dims{1, 2, 3};
        int trials = 100;
        std::uint64_t seed = 0;
        std::string out;
    } audit;
    auto* auditCmd = ffCmd->add_subcommand("audit", "run the four exact inequality checks");
    auditCmd->add_option("--p", audit.primes, "odd primes");
    auditCmd->add_option("--d", audit.dims, "dimensions");
    auditCmd->add_option("--trials", audit.trials, "random sets per check");
    auditCmd->add_option("--seed", audit.seed, "RNG seed");
    auditCmd->add_option("--out", audit.out, "CSV output path");

    // ---- euclid group ----
    auto* euCmd = app.add_subcommand("euclid", "discretized Euclidean experiments");
    euCmd->require_subcommand(1);

    struct { double s = 0.84; int d = 1, n = 10; std::string out; } cantor;
    auto* cantorCmd = euCmd->add_subcommand("cantor", "self-similar set rasterized to a grid");
    cantorCmd->add_option("--s", cantor.s, "target dimension in (0,1]");
    cantorCmd->add_option("--d", cantor.d, "ambient dimension");
    cantorCmd->add_option("--n", cantor.n, "resolution exponent (cell side 2^-n)");
    cantorCmd->add_option("--out", cantor.out, "GridSet output path");

    struct { int q = 4; double s = 0.5; int d = 1, n = 10; std::string out; } lattice;
    auto* latCmd = euCmd->add_subcommand("lattice", "q^{-d/s}-neighborhood of the scaled lattice");
    latCmd->add_option("--q", lattice.q, "lattice parameter");
    latCmd->add_option("--s", lattice.s, "dimension parameter in (0,d)");
    latCmd->add_option("--d", lattice.d, "ambient dimension");
    latCmd->add_option("--n", lattice.n, "resolution exponent");
    latCmd->add_option("--out", lattice.out, "GridSet output path");

    struct { std::string in, in1, in2; double p = 2.0; std::string out; } boxset;
    auto* boxsetCmd = euCmd->add_subcommand("boxset", "box set approximation from grid files");
    boxsetCmd->add_option("--in", boxset.in, "GridSet file for E")->required();
    boxsetCmd->add_option("--in1", boxset.in1, "GridSet file for E1")->required();
    boxsetCmd->add_option("--in2", boxset.in2, "GridSet file for E2")->required();
    boxsetCmd->add_option("--pnorm", boxset.p, "combining l^p exponent (>= 1)");
    boxsetCmd->add_option("--out", boxset.out, "IntervalUnion CSV path");

    struct { std::string in, x; int k = 2; std::string out; } chains;
    auto* chainsCmd = euCmd->add_subcommand("chains", "pinned k-chain length set");
    chainsCmd->add_option("--in", chains.in, "GridSet file")->required();
    chainsCmd->add_option("--x", chains.x, "pin point, comma-separated coords")->required();
    chainsCmd->add_option("--k", chains.k, "chain length (1..4)");
    chainsCmd->add_option("--out", chains.out, "IntervalUnion CSV path");

    struct { std::string in, out; } perim;
    auto* perimCmd = euCmd->add_subcommand("perimeter", "triangle perimeter set");
    perimCmd->add_option("--in", perim.in, "GridSet file")->required();
    perimCmd->add_option("--out", perim.out, "IntervalUnion CSV path");

    struct {
        double s = 0.84, t = 1.0;
        int d = 1, n = 12;
        std::string eps = "0.0625,0.03125,0.015625,0.0078125,0.00390625,0.001953125";
        std::string out;
    } tri;
    auto* triCmd = euCmd->add_subcommand("trilinear", "trilinear mass scaling scan");
    triCmd->add_option("--s", tri.s, "Cantor dimension");
    triCmd->add_option("--t", tri.t, "window center");
    triCmd->add_option("--d", tri.d, "ambient dimension");
    triCmd->add_option("--n", tri.n, "resolution exponent");
    triCmd->add_option("--eps", tri.eps, "comma-separated eps list");
    triCmd->add_option("--out", tri.out, "CSV output path");

    struct {
        double s = 0.4;
        std::string q = "2,4,8,16,32";
        int d = 1, n = 13;
        std::string out;
    } sharp;
    auto* sharpCmd = euCmd->add_subcommand("sharpness", "lattice-neighborhood decay sweep");
    sharpCmd->add_option("--s", sharp.s, "dimension parameter");
    sharpCmd->add_option("--q", sharp.q, "comma-separated q list");
    sharpCmd->add_option("--d", sharp.d, "ambient dimension");
    sharpCmd->add_option("--n", sharp.n, "resolution exponent");
    sharpCmd->add_option("--out", sharp.out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help text
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (sweepCmd->parsed()) {
            hn::BoxSweepConfig cfg;
            cfg.primes = sweep.primes;
            cfg.d = sweep.d;
            cfg.sizes = parseSizes(sweep.sizes);
            cfg.samples = sweep.samples;
            cfg.seed = sweep.seed;
            cfg.exhaustive = sweep.exhaustive;
            std::cerr << "[boxlab] ff box-sweep\n";
            auto res = hn::ffBoxThresholdSweep(cfg);
            emitTable(sweep.out, res.table);
            if (res.thresholdViolations > 0) {
                std::cerr << "threshold violations: " << res.thresholdViolations << '\n';
                g_exitCode = 1;
            }
        } else if (distCmd->parsed()) {
            const auto E = ff::loadPointSet(dist.in);
            emit(dist.out, scalarSetJson(ff::distanceSet(E)).dump());
        } else if (boxCmd->parsed()) {
            const auto E = ff::loadPointSet(box.in);
            emit(box.out, scalarSetJson(ff::boxSet(E)).dump());
        } else if (weilCmd->parsed()) {
            const auto p = ff::PrimeModulus::of(weil.p);
            const double bound = ff::weilSalieBound(p);
            double worst = 0.0;
            for (ff::Scalar t = 1; t < p.p(); ++t) // bound is stated for t != 0
                worst = std::max(worst, ff::sphereFourierMax(p, 2, t));
            const bool ok = worst <= bound + 1e-12;
            json j{{"p", p.p()}, {"residue_mod4", p.residueClassMod4()},
                   {"max_nonzero_coeff", worst}, {"bound", bound}, {"satisfied", ok}};
            emit(weil.out, j.dump());
            if (!ok) g_exitCode = 1;
        } else if (hingeCmd->parsed()) {
            const auto E = ff::loadPointSet(hinge.in);
            const auto rep = ff::errorTermD(E, hinge.t);
            json j{{"p", E.modulus().p()}, {"d", E.dim()}, {"card", E.card()},
                   {"t", rep.t}, {"hinge", ff::int128ToString(rep.hinge)},
                   {"main_term", rep.mainTerm}, {"D", rep.D}, {"bound", rep.bound},
                   {"satisfied", rep.satisfied}};
            emit(hinge.out, j.dump());
            if (E.dim() >= 2 && !rep.satisfied) g_exitCode = 1;
        } else if (nu2Cmd->parsed()) {
            const auto A = ff::loadPointSet(nu2.inA);
            const auto B = ff::loadPointSet(nu2.inB);
            const auto rep = ff::nuSquareInequality(A, B);
            json j{{"lhs", ff::int128ToString(rep.lhs)},
                   {"rhs", ff::int128ToString(rep.rhs)},
                   {"satisfied", rep.satisfied}};
            emit(nu2.out, j.dump());
            if (!rep.satisfied) g_exitCode = 1;
        } else if (auditCmd->parsed()) {
            hn::AuditConfig cfg;
            cfg.primes = audit.primes;
            cfg.dims = audit.dims;
            cfg.trials = audit.trials;
            cfg.seed = audit.seed;
            std::cerr << "[boxlab] ff audit\n";
            auto res = hn::inequalityAudit(cfg);
            emitTable(audit.out, res.table);
            if (res.totalViolations > 0) {
                std::cerr << "inequality violations: " << res.totalViolations << '\n';
                g_exitCode = 1;
            }
        } else if (cantorCmd->parsed()) {
            const auto G = eu::cantorSet(cantor.s, cantor.d, cantor.n);
            if (cantor.out.empty()) {
                std::ostringstream ss;
                eu::writeGridSet(ss, G);
                json j{{"d", G.dim()}, {"n", G.resolution()}, {"cells", G.size()}};
                std::cout << j.dump() << '\n';
            } else {
                eu::saveGridSet(cantor.out, G);
            }
        } else if (latCmd->parsed()) {
            const auto G = eu::latticeNeighborhood(lattice.q, lattice.s, lattice.d, lattice.n);
            if (lattice.out.empty()) {
                json j{{"d", G.dim()}, {"n", G.resolution()}, {"cells", G.size()}};
                std::cout << j.dump() << '\n';
            } else {
                eu::saveGridSet(lattice.out, G);
            }
        } else if (boxsetCmd->parsed()) {
            const auto E = eu::loadGridSet(boxset.in);
            const auto E1 = eu::loadGridSet(boxset.in1);
            const auto E2 = eu::loadGridSet(boxset.in2);
            const auto U = eu::boxSetApprox(E, E1, E2, eu::CombineNorm::pNorm(boxset.p));
            if (boxset.out.empty()) {
                std::cout << intervalUnionJson(U).dump() << '\n';
            } else {
                std::ofstream f(boxset.out);
                eu::writeIntervalUnionCsv(f, U);
            }
        } else if (chainsCmd->parsed()) {
            const auto E = eu::loadGridSet(chains.in);
            const auto x = parsePoint(chains.x, E.dim());
            const auto U = eu::chainLengthSet(E, x, chains.k);
            if (chains.out.empty()) {
                std::cout << intervalUnionJson(U).dump() << '\n';
            } else {
                std::ofstream f(chains.out);
                eu::writeIntervalUnionCsv(f, U);
            }
        } else if (perimCmd->parsed()) {
            const auto E = eu::loadGridSet(perim.in);
            const auto U = eu::perimeterSet(E);
            if (perim.out.empty()) {
                std::cout << intervalUnionJson(U).dump() << '\n';
            } else {
                std::ofstream f(perim.out);
                eu::writeIntervalUnionCsv(f, U);
            }
        } else if (triCmd->parsed()) {
            hn::TrilinearConfig cfg;
            cfg.s = tri.s;
            cfg.d = tri.d;
            cfg.n = tri.n;
            cfg.t = tri.t;
            cfg.epsList = parseEpsList(tri.eps);
            std::cerr << "[boxlab] euclid trilinear\n";
            auto res = hn::trilinearScan(cfg);
            if (tri.out.empty()) {
                json j = json::parse(res.table.toJson());
                j["slope"] = res.slope;
                std::cout << j.dump() << '\n';
            } else {
                std::ofstream f(tri.out);
                res.table.writeCsv(f);
                f << "# slope=" << res.slope << "\r\n";
            }
        } else if (sharpCmd->parsed()) {
            hn::SharpnessConfig cfg;
            cfg.s = sharp.s;
            cfg.d = sharp.d;
            cfg.n = sharp.n;
            for (double q : parseEpsList(sharp.q)) cfg.qs.push_back(static_cast<int>(q));
            std::cerr << "[boxlab] euclid sharpness\n";
            auto res = hn::sharpnessSweep(cfg);
            if (sharp.out.empty()) {
                json j = json::parse(res.table.toJson());
                j["slope"] = res.slope;
                std::cout << j.dump() << '\n';
            } else {
                std::ofstream f(sharp.out);
                res.table.writeCsv(f);
                f << "# slope=" << res.slope << "\r\n";
            }
        }
    } catch (const boxlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return g_exitCode;
}
