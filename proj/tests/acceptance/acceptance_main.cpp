// Acceptance suite: one quantitative criterion per number, each printing a
// single [PASS]/[FAIL] line with the measured values. Run with no arguments
// for all criteria, or with a criterion number (and, for #10, the path to the
// CLI binary; falls back to the EFLAB_CLI environment variable).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eflab/catalog.hpp"
#include "eflab/comparator.hpp"
#include "eflab/reports.hpp"

using namespace eflab;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double now_seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// 1. Functional-equation gate: residual < 1e-6 on a fixed 20-point grid for
//    zeta, chi3, chi4, zeta*chi3; under 10 s.
void criterion_1() {
    double t0 = now_seconds();
    std::vector<Complex> grid;
    for (int k = 0; k < 20; ++k) grid.emplace_back(0.3 + 0.12 * k, -9.0 + 1.1 * k);
    double worst = 0.0;
    std::string worst_at;
    for (const char* spec : {"zeta", "chi3", "chi4", "zeta*chi3"}) {
        auto F = parse_datum(spec);
        for (Complex s : grid) {
            double r = functional_equation_residual(F, s);
            if (r > worst) {
                worst = r;
                worst_at = std::string(spec) + " @ s=(" + format_g17(s.real()) + "," +
                           format_g17(s.imag()) + ")";
            }
        }
    }
    double dt = now_seconds() - t0;
    bool pass = worst < 1e-6 && dt < 10.0;
    std::ostringstream msg;
    msg << "functional-equation residual: worst " << format_g17(worst) << " (" << worst_at << "), "
        << format_g17(dt) << " s";
    report(1, pass, msg.str());
}

// 2. Zero census: zeta has 29 zeros below 100 with the first at
//    14.134725 +- 1e-4; scan count equals the argument-principle count for
//    every built-in at T in {50, 100, 200}; under 60 s.
void criterion_2() {
    double t0 = now_seconds();
    auto zeta = parse_datum("zeta");
    auto list = scan_zeros(zeta, 100.0, 0.02);
    bool pass = list.complete && list.ordinates.size() == 29 &&
                std::abs(list.ordinates[0] - 14.134725) <= 1e-4;
    std::string counts;
    for (const char* spec : {"zeta", "chi3", "chi4", "zeta*chi3"}) {
        auto F = parse_datum(spec);
        for (double T : {50.0, 100.0, 200.0}) {
            auto l = scan_zeros(F, T, default_scan_mesh(T));
            pass = pass && l.complete;
            if (!l.complete) counts += std::string(" INCOMPLETE:") + spec + "@" + format_g17(T);
        }
    }
    double dt = now_seconds() - t0;
    pass = pass && dt < 60.0;
    std::ostringstream msg;
    msg << "zero census: zeta " << list.ordinates.size() << " zeros <= 100, first "
        << format_g17(list.ordinates.empty() ? 0.0 : list.ordinates[0]) << counts << ", "
        << format_g17(dt) << " s";
    report(2, pass, msg.str());
}

// 3. Explicit-formula identity on the grid {zeta, chi3} x {0,20,50} x {1,2,4}
//    with widths [1,1], zero_height 200; residual <= budget + 1e-4; under 5 min.
void criterion_3() {
    double t0 = now_seconds();
    auto pair = sinc_product_pair({1.0, 1.0});
    bool pass = true;
    double worst_excess = -1e9;
    std::string worst_at;
    for (const char* spec : {"zeta", "chi3"}) {
        auto F = parse_datum(spec);
        auto zeros = scan_zeros(F, 210.0, 0.02);
        pass = pass && zeros.complete;
        for (double t : {0.0, 20.0, 50.0}) {
            for (double L : {1.0, 2.0, 4.0}) {
                EFParams p;
                p.t = t;
                p.L = L;
                p.zero_height = 200.0;
                auto rep = verify_formula(F, zeros, pair, p);
                pass = pass && rep.pass;
                double excess = rep.residual - rep.budget;
                if (excess > worst_excess) {
                    worst_excess = excess;
                    worst_at = std::string(spec) + " t=" + format_g17(t) + " L=" + format_g17(L) +
                               " residual=" + format_g17(rep.residual) + " budget=" +
                               format_g17(rep.budget);
                }
            }
        }
    }
    double dt = now_seconds() - t0;
    pass = pass && dt < 300.0;
    std::ostringstream msg;
    msg << "explicit-formula identity: worst cell " << worst_at << ", " << format_g17(dt) << " s";
    report(3, pass, msg.str());
}

// 4. Stirling regime: |arch/(g(0) d log t / L) - 1| <= 0.15 at t = 1e3,
//    L = log t, for zeta and zeta*chi3; the arch ratio between them is 2
//    within 15%.
void criterion_4() {
    auto pair = sinc_product_pair({1.0});
    auto zeta = parse_datum("zeta");
    auto prod = parse_datum("zeta*chi3");
    const double t = 1000.0, L = std::log(t);
    EFParams p;
    p.t = t;
    p.L = L;
    double arch_z = arch_term(zeta, pair, p).real();
    double arch_p = arch_term(prod, pair, p).real();
    double dev_z = std::abs(arch_z / stirling_H(zeta, pair, t, L) - 1.0);
    double dev_p = std::abs(arch_p / stirling_H(prod, pair, t, L) - 1.0);
    double ratio = arch_p / arch_z;
    bool pass = dev_z <= 0.15 && dev_p <= 0.15 && std::abs(ratio / 2.0 - 1.0) <= 0.15;
    std::ostringstream msg;
    msg << "Stirling regime: |ratio-1| zeta " << format_g17(dev_z) << ", zeta*chi3 "
        << format_g17(dev_p) << " (gate 0.15); degree ratio " << format_g17(ratio)
        << " vs 2 (within 15%: " << (std::abs(ratio / 2.0 - 1.0) <= 0.15 ? "yes" : "no") << ")";
    report(4, pass, msg.str());
}

// 5. Degree test: distinct for (zeta, zeta*chi3), equal for (zeta, chi3),
//    at T = 1e3 with 64 samples.
void criterion_5() {
    auto pair = sinc_product_pair({1.0});
    const double T = 1000.0, L = std::log(T);
    auto d1 = degree_test(parse_datum("zeta"), parse_datum("zeta*chi3"), pair, T, L, 64);
    auto d2 = degree_test(parse_datum("zeta"), parse_datum("chi3"), pair, T, L, 64);
    bool pass = d1.distinct && !d2.distinct;
    std::ostringstream msg;
    msg << "degree test: (zeta, zeta*chi3) mean " << format_g17(d1.mean_scaled_delta) << " -> \""
        << d1.verdict << "\"; (zeta, chi3) mean " << format_g17(d2.mean_scaled_delta) << " -> \""
        << d2.verdict << "\" (threshold " << format_g17(d1.threshold) << ")";
    report(5, pass, msg.str());
}

// 6. Coefficient recovery: zeros-mode probe for (chi3, chi4), m = 2, T = 200,
//    L = 3 within 25% of c(2) Lambda(2)/sqrt(2); coefficient-mode probe agrees
//    with zeros-mode within the explicit-formula budget; under 10 min.
void criterion_6() {
    double t0 = now_seconds();
    auto L3 = parse_datum("chi3");
    auto L4 = parse_datum("chi4");
    auto pair = sinc_product_pair({1.0});
    auto z3 = scan_zeros(L3, 445.0, 0.02);
    auto z4 = scan_zeros(L4, 445.0, 0.02);
    ProbeOptions opts;
    opts.zerosF = &z3;
    opts.zerosG = &z4;
    auto coeff = coefficient_probe(L3, L4, 2, 200.0, 3.0, 4.0, 0, pair, opts);
    opts.zeros_mode = true;
    auto zmode = coefficient_probe(L3, L4, 2, 200.0, 3.0, 4.0, 0, pair, opts);
    double dt = now_seconds() - t0;
    double agreement = std::abs(coeff.estimate - zmode.estimate);
    bool pass = zmode.relative_error <= 0.25 && agreement <= zmode.budget && dt < 600.0;
    std::ostringstream msg;
    msg << "coefficient recovery: zeros-mode estimate (" << format_g17(zmode.estimate.real()) << ","
        << format_g17(zmode.estimate.imag()) << ") vs target " << format_g17(zmode.target.real())
        << ", rel err " << format_g17(zmode.relative_error) << "; |coeff-zeros| "
        << format_g17(agreement) << " <= budget " << format_g17(zmode.budget) << ", "
        << format_g17(dt) << " s";
    report(6, pass, msg.str());
}

// 7. Mean-value bound: lhs/rhs <= 8 for the built-in pair catalog at
//    T in {50, 100, 200}, L = 4.
void criterion_7() {
    auto pair = sinc_product_pair({1.0, 1.0});
    bool pass = true;
    double worst = 0.0;
    std::string worst_at;
    for (const auto& [fs_, gs_] : builtin_pair_catalog()) {
        auto F = parse_datum(fs_);
        auto G = parse_datum(gs_);
        for (double T : {50.0, 100.0, 200.0}) {
            auto rep = mean_value_check(F, G, pair, T, 4.0);
            if (rep.ratio > worst) {
                worst = rep.ratio;
                worst_at = fs_ + " vs " + gs_ + " @ T=" + format_g17(T);
            }
            pass = pass && rep.ratio <= 8.0;
        }
    }
    std::ostringstream msg;
    msg << "mean-value bound: worst lhs/rhs " << format_g17(worst) << " (" << worst_at
        << "), gate 8";
    report(7, pass, msg.str());
}

// 8. Ingham decay holds on [10, 1e3] for (N=2, alpha=1, M=200) and fails for
//    the single-factor Fejer pair.
void criterion_8() {
    auto grid = default_decay_grid(10.0, 1000.0);
    auto ing = verify_decay(ingham_pair(2, 1.0, 200), grid);
    auto fej = verify_decay(sinc_product_pair({1.0}), grid);
    bool pass = ing.holds && !fej.holds;
    std::ostringstream msg;
    msg << "Ingham decay: ingham holds=" << (ing.holds ? "yes" : "no") << " (max ratio "
        << format_g17(ing.max_ratio) << " at t=" << format_g17(ing.worst_t)
        << "); Fejer holds=" << (fej.holds ? "yes" : "no") << " (still growing at t="
        << format_g17(fej.worst_t) << ")";
    report(8, pass, msg.str());
}

// 9. Condition checkers: diff == 2 gives a condition-(1) ratio in [3, 5] at
//    x = 20; primes 1 mod 4 fail thinness at 1e6; a finite set passes.
void criterion_9() {
    auto growth = check_growth_conditions([](std::uint64_t) { return 2.0; }, 20.0);
    bool g_ok = growth.bound_1_ratio >= 3.0 && growth.bound_1_ratio <= 5.0;

    auto mod4 = check_exceptional_thinness(
        ExceptionalSet::from_predicate([](std::uint64_t p) { return p % 4 == 1; }), 1e6, 0.1);
    auto finite = check_exceptional_thinness(
        ExceptionalSet::from_predicate([](std::uint64_t p) { return p <= 100; }), 1e6, 0.1);
    bool pass = g_ok && !mod4.passes && finite.passes;
    std::ostringstream msg;
    msg << "condition checkers: S(20)/20 = " << format_g17(growth.bound_1_ratio)
        << " (gate [3,5]); mod-4 thinness C = " << format_g17(mod4.fitted_constant)
        << " fails=" << (!mod4.passes ? "yes" : "no") << "; finite passes="
        << (finite.passes ? "yes" : "no");
    report(9, pass, msg.str());
}

// 10. Determinism: the CLI acceptance runs, repeated, produce byte-identical
//     report files.
struct CliRun {
    std::string name;
    std::vector<std::string> args;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_10(const std::string& cli) {
    if (cli.empty() || !fs::exists(cli)) {
        report(10, false, "determinism: CLI binary not found (pass its path as argv[2] or set EFLAB_CLI)");
        return;
    }
    std::vector<CliRun> runs = {
        {"zeros", {"zeros", "--datum", "zeta", "--tmax", "100"}},
        {"verify-ef", {"verify-ef", "--datum", "zeta", "--t", "0,20,50", "--L", "2",
                       "--pair", "sinc:1,1", "--zero-height", "200"}},
        {"decay", {"decay", "--pair", "ingham:2,1,200"}},
        {"degree-test", {"degree-test", "--F", "zeta", "--G", "zeta*chi3", "--T", "1000",
                         "--samples", "64", "--expect", "distinct"}},
        {"probe", {"probe", "--F", "chi3", "--G", "chi4", "--m", "2", "--T", "200", "--L", "3",
                   "--mode", "zeros"}},
        {"meanvalue", {"meanvalue", "--F", "zeta", "--G", "chi3", "--pair", "sinc:1,1", "--T", "100"}},
        {"conditions", {"conditions", "--check", "thinness", "--E", "mod4:1", "--xmax", "1000000",
                        "--expect", "fail"}},
    };
    bool pass = true;
    std::string detail;
    fs::path base = fs::temp_directory_path() / "eflab_determinism";
    fs::remove_all(base);
    for (const auto& run : runs) {
        std::string outs[2];
        for (int rep = 0; rep < 2; ++rep) {
            fs::path dir = base / (run.name + "_" + std::to_string(rep));
            fs::create_directories(dir);
            std::string cmd = "\"" + cli + "\"";
            for (const auto& a : run.args) cmd += " " + a;
            cmd += " --out-dir " + dir.string() + " > " + (dir / "stdout.txt").string() + " 2>&1";
            int rc = std::system(cmd.c_str());
            if (rc == -1) pass = false;
            std::string blob;
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) blob += f.filename().string() + "\n" + read_file(f);
            outs[rep] = blob;
        }
        if (outs[0] != outs[1] || outs[0].empty()) {
            pass = false;
            detail += " MISMATCH:" + run.name;
        }
    }
    std::ostringstream msg;
    msg << "determinism: " << runs.size() << " CLI runs repeated byte-identically" << detail;
    report(10, pass, msg.str());
}

// Exit-code contract (not a numbered criterion): 0 pass, 1 check failure,
// 2 config error, 3 numerical failure, each provoked with synthetic inputs.
void cli_exit_codes(const std::string& cli) {
    if (cli.empty() || !fs::exists(cli)) {
        report(11, false, "exit codes: CLI binary not found");
        return;
    }
    fs::path base = fs::temp_directory_path() / "eflab_exitcodes";
    fs::remove_all(base);
    fs::create_directories(base);
    auto run = [&](const std::string& args) {
        std::string cmd = "\"" + cli + "\" " + args + " --out-dir " + (base / "out").string() +
                          " > " + (base / "log.txt").string() + " 2>&1";
        int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };

    std::string bad_cfg = (base / "bad.cfg").string();
    std::ofstream(bad_cfg) << "this is not a key value file\n";

    struct Case {
        std::string name, args;
        int expected;
    } cases[] = {
        {"pass", "zeros --datum zeta --tmax 30", 0},
        {"check-failure", "decay --pair sinc:1 --expect holds", 1},
        {"unknown-datum", "zeros --datum nosuch --tmax 30", 2},
        {"malformed-config", "zeros --config " + bad_cfg, 2},
        {"missing-config", "zeros --config " + (base / "absent.cfg").string(), 2},
        {"mask-overflow", "probe --F chi3 --G chi4 --m 2 --T 100 --L 3 --W 1", 3},
    };
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        int got = run(c.args);
        if (got != c.expected) {
            pass = false;
            detail += " " + c.name + ": expected " + std::to_string(c.expected) + " got " +
                      std::to_string(got);
        }
    }
    report(11, pass, "exit-code contract (0/1/2/3)" + detail);
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    std::string cli = argc > 2 ? argv[2] : (std::getenv("EFLAB_CLI") ? std::getenv("EFLAB_CLI") : "");

    auto want = [&](int n) { return only == 0 || only == n; };
    if (want(1)) criterion_1();
    if (want(2)) criterion_2();
    if (want(3)) criterion_3();
    if (want(4)) criterion_4();
    if (want(5)) criterion_5();
    if (want(6)) criterion_6();
    if (want(7)) criterion_7();
    if (want(8)) criterion_8();
    if (want(9)) criterion_9();
    if (want(10)) criterion_10(cli);
    if (only == 11) cli_exit_codes(cli);
    return g_failures == 0 ? 0 : 1;
}
