// eflab: batch experiment runner for the explicit-formula laboratory.
//
// Every subcommand reads an optional flat config (--config), applies command
// line overrides, writes JSON + CSV reports into the output directory, prints
// a one-line PASS/FAIL summary, and exits 0 only when all checks pass.
// Exit codes: 0 = pass, 1 = check failed, 2 = config/usage error,
// 3 = numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "eflab/catalog.hpp"
#include "eflab/comparator.hpp"
#include "eflab/config.hpp"
#include "eflab/reports.hpp"

namespace fs = std::filesystem;
using namespace eflab;

namespace {

Config default_config() {
    Config c;
    c.set("meta", "schema_version", "1");
    c.set("datum", "F", "zeta");
    c.set("datum", "G", "chi3");
    c.set("datum", "character_file", "");
    c.set("pair", "spec", "sinc:1,1");
    c.set("zeros", "t_max", "100");
    c.set("zeros", "mesh", "0.02");
    c.set("ef", "t_grid", "0");
    c.set("ef", "L_grid", "2");
    c.set("ef", "zero_height", "200");
    c.set("ef", "quad_halfwidth", "0");
    c.set("ef", "quad_points", "0");
    c.set("decay", "pair", "ingham:2,1,200");
    c.set("decay", "t_lo", "10");
    c.set("decay", "t_hi", "1000");
    c.set("decay", "expect", "holds");
    c.set("degree", "T", "1000");
    c.set("degree", "L", "0");
    c.set("degree", "samples", "64");
    c.set("degree", "threshold_scale", "0.5");
    c.set("degree", "expect", "");
    c.set("probe", "m", "2");
    c.set("probe", "T", "200");
    c.set("probe", "L", "3");
    c.set("probe", "W", "4");
    c.set("probe", "n_quad", "0");
    c.set("probe", "mode", "coefficients");
    c.set("probe", "unmasked", "0");
    c.set("probe", "pair", "sinc:1");
    c.set("probe", "tolerance", "0.25");
    c.set("probe", "scan_margin", "45");
    c.set("meanvalue", "T", "100");
    c.set("meanvalue", "L", "4");
    c.set("meanvalue", "n_quad", "0");
    c.set("meanvalue", "max_ratio", "8");
    c.set("conditions", "check", "growth");
    c.set("conditions", "x_max", "20");
    c.set("conditions", "diff", "const:2");
    c.set("conditions", "r1_lo", "0");
    c.set("conditions", "r1_hi", "0");
    c.set("conditions", "E", "mod4:1");
    c.set("conditions", "delta", "0.1");
    c.set("conditions", "ceiling", "10");
    c.set("conditions", "expect", "pass");
    c.set("output", "dir", "out");
    return c;
}

void write_out(const Config& cfg, const std::string& name, const std::string& content) {
    fs::path dir(cfg.get("output", "dir", "out"));
    fs::create_directories(dir);
    write_text_file((dir / name).string(), content);
}

std::string yesno(bool b) { return b ? "PASS" : "FAIL"; }

SelbergDatum datum_from(const Config& cfg, const char* key, const char* fallback) {
    std::string spec = cfg.get("datum", key, fallback);
    std::string path = cfg.get("datum", "character_file", "");
    if (path.empty()) return parse_datum(spec);
    CharacterTable table = load_character_table_file(path);
    return parse_datum(spec, &table);
}

// ---------- subcommands ----------

int run_zeros(const Config& cfg) {
    auto F = datum_from(cfg, "F", "zeta");
    double t_max = cfg.get_double("zeros", "t_max", 100);
    double mesh = cfg.get_double("zeros", "mesh", 0.02);

    ZeroList list = scan_zeros(F, t_max, mesh);
    CountReport count = zero_count_check(F, t_max);

    Json side = zero_list_sidecar(list);
    side.set("count_check", to_json(count));
    write_out(cfg, "zeros.csv", zero_list_csv(list));
    write_out(cfg, "zeros.json", side.dump());

    bool ok = list.complete && count.exact_match;
    std::printf("%s zeros datum=%s t_max=%s found=%zu complete=%d discrepancy=%s\n", yesno(ok).c_str(),
                F.name.c_str(), format_g17(t_max).c_str(), list.ordinates.size(), (int)list.complete,
                format_g17(count.discrepancy).c_str());
    return ok ? 0 : 1;
}

int run_verify_ef(const Config& cfg) {
    auto F = datum_from(cfg, "F", "zeta");
    auto pair = parse_pair(cfg.get("pair", "spec", "sinc:1,1"));
    auto t_grid = cfg.get_list("ef", "t_grid", {0.0});
    auto L_grid = cfg.get_list("ef", "L_grid", {2.0});
    double zero_height = cfg.get_double("ef", "zero_height", 200);

    ZeroList zeros = scan_zeros(F, zero_height + std::max(10.0, 0.05 * zero_height),
                                default_scan_mesh(zero_height));

    Json arr = Json::array();
    Csv csv({"datum", "t", "L", "zero_height", "residual", "budget", "pass"});
    bool all = true;
    for (double L : L_grid) {
        for (double t : t_grid) {
            EFParams p;
            p.t = t;
            p.L = L;
            p.zero_height = zero_height;
            p.quad_halfwidth = cfg.get_double("ef", "quad_halfwidth", 0);
            p.quad_points = (int)cfg.get_int("ef", "quad_points", 0);
            EFReport rep = verify_formula(F, zeros, pair, p);
            all = all && rep.pass;
            arr.push(to_json(rep));
            csv.add_row({F.name, format_g17(t), format_g17(L), format_g17(zero_height),
                         format_g17(rep.residual), format_g17(rep.budget), rep.pass ? "1" : "0"});
        }
    }
    Json out = Json::object();
    out.set("schema_version", kSchemaVersion);
    out.set("pair", to_json(pair));
    out.set("reports", std::move(arr));
    write_out(cfg, "ef.json", out.dump());
    write_out(cfg, "ef.csv", csv.dump());
    std::printf("%s verify-ef datum=%s pair=%s cells=%zu\n", yesno(all).c_str(), F.name.c_str(),
                pair_label(pair).c_str(), t_grid.size() * L_grid.size());
    return all ? 0 : 1;
}

int run_decay(const Config& cfg) {
    auto pair = parse_pair(cfg.get("decay", "pair", "ingham:2,1,200"));
    double lo = cfg.get_double("decay", "t_lo", 10);
    double hi = cfg.get_double("decay", "t_hi", 1000);
    auto rep = verify_decay(pair, default_decay_grid(lo, hi));

    Json j = to_json(rep);
    j.set("pair", to_json(pair));
    Csv csv({"t", "ratio"});
    for (const auto& [t, r] : rep.samples) csv.add_row({format_g17(t), format_g17(r)});
    write_out(cfg, "decay.json", j.dump());
    write_out(cfg, "decay.csv", csv.dump());

    std::string expect = cfg.get("decay", "expect", "holds");
    bool ok = expect == "fails" ? !rep.holds : rep.holds;
    std::printf("%s decay pair=%s holds=%d max_ratio=%s worst_t=%s\n", yesno(ok).c_str(),
                pair_label(pair).c_str(), (int)rep.holds, format_g17(rep.max_ratio).c_str(),
                format_g17(rep.worst_t).c_str());
    return ok ? 0 : 1;
}

int run_degree_test(const Config& cfg) {
    auto F = datum_from(cfg, "F", "zeta");
    auto G = datum_from(cfg, "G", "chi3");
    auto pair = parse_pair(cfg.get("pair", "spec", "sinc:1"));
    double T = cfg.get_double("degree", "T", 1000);
    double L = cfg.get_double("degree", "L", 0);
    if (L <= 0.0) L = std::log(T);
    int samples = (int)cfg.get_int("degree", "samples", 64);
    double scale = cfg.get_double("degree", "threshold_scale", 0.5);

    auto rep = degree_test(F, G, pair, T, L, samples, scale);
    Json j = to_json(rep);
    j.set("F", F.name);
    j.set("G", G.name);
    j.set("T", T);
    j.set("L", L);
    Csv csv({"t", "scaled_delta"});
    for (const auto& [t, d] : rep.rows) csv.add_row({format_g17(t), format_g17(d)});
    write_out(cfg, "degree.json", j.dump());
    write_out(cfg, "degree.csv", csv.dump());

    std::string expect = cfg.get("degree", "expect", "");
    bool ok = true;
    if (expect == "distinct") ok = rep.distinct;
    if (expect == "equal") ok = !rep.distinct;
    std::printf("%s degree-test F=%s G=%s mean=%s threshold=%s verdict=\"%s\"\n", yesno(ok).c_str(),
                F.name.c_str(), G.name.c_str(), format_g17(rep.mean_scaled_delta).c_str(),
                format_g17(rep.threshold).c_str(), rep.verdict.c_str());
    return ok ? 0 : 1;
}

int run_probe(const Config& cfg) {
    auto F = datum_from(cfg, "F", "chi3");
    auto G = datum_from(cfg, "G", "chi4");
    auto pair = parse_pair(cfg.get("probe", "pair", "sinc:1"));
    std::uint64_t m = (std::uint64_t)cfg.get_int("probe", "m", 2);
    double T = cfg.get_double("probe", "T", 200);
    double L = cfg.get_double("probe", "L", 3);
    double W = cfg.get_double("probe", "W", 4);
    int n_quad = (int)cfg.get_int("probe", "n_quad", 0);
    double tol = cfg.get_double("probe", "tolerance", 0.25);
    double margin = cfg.get_double("probe", "scan_margin", 45);
    std::string mode = cfg.get("probe", "mode", "coefficients");
    bool unmasked = cfg.get_int("probe", "unmasked", 0) != 0;

    ProbeOptions opts;
    opts.zeros_mode = mode == "zeros";
    opts.use_mask = !unmasked;
    ZeroList zF, zG;
    if (opts.zeros_mode || opts.use_mask) {
        zF = scan_zeros(F, 2.0 * T + margin, default_scan_mesh(2.0 * T + margin));
        zG = scan_zeros(G, 2.0 * T + margin, default_scan_mesh(2.0 * T + margin));
        opts.zerosF = &zF;
        opts.zerosG = &zG;
    }
    auto rep = coefficient_probe(F, G, m, T, L, W, n_quad, pair, opts);

    Json j = to_json(rep);
    j.set("F", F.name);
    j.set("G", G.name);
    j.set("pair", to_json(pair));
    Csv csv({"t_mid", "panel_re", "panel_im"});
    for (const auto& row : rep.rows)
        csv.add_row({format_g17(row[0]), format_g17(row[1]), format_g17(row[2])});
    write_out(cfg, "probe.json", j.dump());
    write_out(cfg, "probe.csv", csv.dump());

    bool ok = rep.relative_error <= tol;
    std::printf("%s probe F=%s G=%s m=%llu mode=%s estimate=(%s,%s) target=%s rel_error=%s\n",
                yesno(ok).c_str(), F.name.c_str(), G.name.c_str(), (unsigned long long)m, mode.c_str(),
                format_g17(rep.estimate.real()).c_str(), format_g17(rep.estimate.imag()).c_str(),
                format_g17(rep.target.real()).c_str(), format_g17(rep.relative_error).c_str());
    return ok ? 0 : 1;
}

int run_meanvalue(const Config& cfg) {
    auto F = datum_from(cfg, "F", "zeta");
    auto G = datum_from(cfg, "G", "chi3");
    auto pair = parse_pair(cfg.get("pair", "spec", "sinc:1,1"));
    double T = cfg.get_double("meanvalue", "T", 100);
    double L = cfg.get_double("meanvalue", "L", 4);
    int n_quad = (int)cfg.get_int("meanvalue", "n_quad", 0);
    double max_ratio = cfg.get_double("meanvalue", "max_ratio", 8);

    auto rep = mean_value_check(F, G, pair, T, L, n_quad);
    Json j = to_json(rep);
    j.set("F", F.name);
    j.set("G", G.name);
    Csv csv({"t_mid", "panel_integral"});
    for (const auto& [t, v] : rep.rows) csv.add_row({format_g17(t), format_g17(v)});
    write_out(cfg, "meanvalue.json", j.dump());
    write_out(cfg, "meanvalue.csv", csv.dump());

    bool ok = rep.ratio <= max_ratio;
    std::printf("%s meanvalue F=%s G=%s T=%s lhs=%s rhs=%s ratio=%s\n", yesno(ok).c_str(), F.name.c_str(),
                G.name.c_str(), format_g17(T).c_str(), format_g17(rep.lhs_integral).c_str(),
                format_g17(rep.rhs_bound).c_str(), format_g17(rep.ratio).c_str());
    return ok ? 0 : 1;
}

std::function<double(std::uint64_t)> parse_diff(const std::string& spec, const Config& cfg) {
    if (spec.rfind("const:", 0) == 0) {
        double c = std::stod(spec.substr(6));
        return [c](std::uint64_t) { return c; };
    }
    if (spec.rfind("single:", 0) == 0) {
        std::uint64_t p = std::stoull(spec.substr(7));
        return [p](std::uint64_t q) { return q == p ? 1.0 : 0.0; };
    }
    if (spec == "pair") {
        auto F = std::make_shared<SelbergDatum>(datum_from(cfg, "F", "zeta"));
        auto G = std::make_shared<SelbergDatum>(datum_from(cfg, "G", "chi3"));
        return [F, G](std::uint64_t p) { return std::abs(F->a(p * p) - G->a(p * p)); };
    }
    throw ConfigError("conditions: unknown diff spec " + spec);
}

ExceptionalSet parse_exceptional(const std::string& spec) {
    if (spec == "none") return ExceptionalSet::from_list({});
    if (spec.rfind("mod4:", 0) == 0) {
        std::uint64_t r = std::stoull(spec.substr(5));
        return ExceptionalSet::from_predicate([r](std::uint64_t p) { return p % 4 == r; });
    }
    if (spec.rfind("below:", 0) == 0) {
        std::uint64_t n = std::stoull(spec.substr(6));
        return ExceptionalSet::from_predicate([n](std::uint64_t p) { return p <= n; });
    }
    if (spec.rfind("list:", 0) == 0) {
        std::vector<std::uint64_t> v;
        std::stringstream ss(spec.substr(5));
        std::string item;
        while (std::getline(ss, item, ';')) v.push_back(std::stoull(item));
        return ExceptionalSet::from_list(std::move(v));
    }
    throw ConfigError("conditions: unknown exceptional-set spec " + spec);
}

int run_conditions(const Config& cfg) {
    std::string check = cfg.get("conditions", "check", "growth");
    if (check == "growth") {
        double x_max = cfg.get_double("conditions", "x_max", 20);
        auto diff = parse_diff(cfg.get("conditions", "diff", "const:2"), cfg);
        auto rep = check_growth_conditions(diff, x_max);
        Json j = to_json(rep);
        j.set("x_max", x_max);
        Csv csv({"x", "sum", "ratio1", "ratio3"});
        for (const auto& row : rep.rows)
            csv.add_row({format_g17(row.x), format_g17(row.sum), format_g17(row.ratio1),
                         format_g17(row.ratio3)});
        write_out(cfg, "conditions.json", j.dump());
        write_out(cfg, "conditions.csv", csv.dump());
        double lo = cfg.get_double("conditions", "r1_lo", 0);
        double hi = cfg.get_double("conditions", "r1_hi", 0);
        bool ok = hi <= lo || (rep.bound_1_ratio >= lo && rep.bound_1_ratio <= hi);
        std::printf("%s conditions growth x_max=%s S=%s ratio1=%s ratio3=%s\n", yesno(ok).c_str(),
                    format_g17(x_max).c_str(), format_g17(rep.sum_at_x).c_str(),
                    format_g17(rep.bound_1_ratio).c_str(), format_g17(rep.bound_3_ratio).c_str());
        return ok ? 0 : 1;
    }
    if (check == "thinness") {
        double x_max = cfg.get_double("conditions", "x_max", 1e6);
        double delta = cfg.get_double("conditions", "delta", 0.1);
        double ceiling = cfg.get_double("conditions", "ceiling", 10);
        auto E = parse_exceptional(cfg.get("conditions", "E", "mod4:1"));
        auto rep = check_exceptional_thinness(E, x_max, delta, ceiling);
        Json j = to_json(rep);
        Csv csv({"x", "count", "fitted_c"});
        for (const auto& row : rep.counts)
            csv.add_row({format_g17(row.x), std::to_string(row.count), format_g17(row.fitted_c)});
        write_out(cfg, "conditions.json", j.dump());
        write_out(cfg, "conditions.csv", csv.dump());
        bool expect_pass = cfg.get("conditions", "expect", "pass") == "pass";
        bool ok = rep.passes == expect_pass;
        std::printf("%s conditions thinness x_max=%s fitted_C=%s passes=%d\n", yesno(ok).c_str(),
                    format_g17(x_max).c_str(), format_g17(rep.fitted_constant).c_str(), (int)rep.passes);
        return ok ? 0 : 1;
    }
    throw ConfigError("conditions: check must be growth or thinness");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eflab: L-function explicit-formula laboratory"};
    app.require_subcommand(1);
    app.fallthrough(); // parent flags (--config, --out-dir) may follow the subcommand

    std::string config_path, out_dir;
    app.add_option("--config", config_path, "flat key-value config file")->expected(1);
    app.add_option("--out-dir", out_dir, "output directory for reports");

    // subcommand flag -> [section] key overrides
    struct Override {
        CLI::Option* opt;
        std::string section, key, value;
    };
    std::deque<Override> overrides;
    auto bind = [&](CLI::App* sub, const std::string& flag, const std::string& section,
                    const std::string& key, const std::string& help) {
        overrides.push_back({nullptr, section, key, ""});
        auto& slot = overrides.back();
        slot.opt = sub->add_option(flag, slot.value, help);
    };

    auto* emit = app.add_subcommand("emit-default-config", "print the canonical default config");
    std::string emit_path;
    emit->add_option("--out", emit_path, "write to file instead of stdout");

    auto* zeros = app.add_subcommand("zeros", "scan critical-line zeros and certify the count");
    bind(zeros, "--datum", "datum", "F", "datum spec (zeta, chi3, L:q.j, products with *)");
    bind(zeros, "--character-file", "datum", "character_file", "character table file (q index residue re im)");
    bind(zeros, "--tmax", "zeros", "t_max", "scan height");
    bind(zeros, "--mesh", "zeros", "mesh", "scan mesh");

    auto* vef = app.add_subcommand("verify-ef", "verify the explicit-formula identity on a grid");
    bind(vef, "--datum", "datum", "F", "datum spec");
    bind(vef, "--character-file", "datum", "character_file", "character table file");
    bind(vef, "--pair", "pair", "spec", "test-function pair spec");
    bind(vef, "--t", "ef", "t_grid", "t grid (comma separated)");
    bind(vef, "--L", "ef", "L_grid", "L grid (comma separated)");
    bind(vef, "--zero-height", "ef", "zero_height", "zero-sum cutoff");

    auto* dec = app.add_subcommand("decay", "sweep the almost-exponential decay envelope");
    bind(dec, "--pair", "decay", "pair", "pair spec");
    bind(dec, "--tlo", "decay", "t_lo", "sweep start");
    bind(dec, "--thi", "decay", "t_hi", "sweep end");
    bind(dec, "--expect", "decay", "expect", "holds|fails");

    auto* deg = app.add_subcommand("degree-test", "archimedean degree separation test");
    bind(deg, "--F", "datum", "F", "first datum");
    bind(deg, "--G", "datum", "G", "second datum");
    bind(deg, "--pair", "pair", "spec", "pair spec");
    bind(deg, "--T", "degree", "T", "base height");
    bind(deg, "--L", "degree", "L", "scale (0 = log T)");
    bind(deg, "--samples", "degree", "samples", "number of t samples");
    bind(deg, "--expect", "degree", "expect", "distinct|equal");

    auto* prb = app.add_subcommand("probe", "coefficient probe: recover c(m) from D or from zeros");
    bind(prb, "--F", "datum", "F", "first datum");
    bind(prb, "--G", "datum", "G", "second datum");
    bind(prb, "--m", "probe", "m", "probed prime power");
    bind(prb, "--T", "probe", "T", "base height");
    bind(prb, "--L", "probe", "L", "scale");
    bind(prb, "--W", "probe", "W", "mask parameter");
    bind(prb, "--n-quad", "probe", "n_quad", "quadrature panels (0 = auto)");
    bind(prb, "--mode", "probe", "mode", "coefficients|zeros");
    bind(prb, "--unmasked", "probe", "unmasked", "1 = integrate over all of [T,2T]");
    bind(prb, "--pair", "probe", "pair", "pair spec");
    bind(prb, "--tolerance", "probe", "tolerance", "relative error gate");

    auto* mv = app.add_subcommand("meanvalue", "mean-value bound for the prime-side difference");
    bind(mv, "--F", "datum", "F", "first datum");
    bind(mv, "--G", "datum", "G", "second datum");
    bind(mv, "--pair", "pair", "spec", "pair spec");
    bind(mv, "--T", "meanvalue", "T", "base height");
    bind(mv, "--L", "meanvalue", "L", "scale");
    bind(mv, "--n-quad", "meanvalue", "n_quad", "quadrature panels (0 = auto)");
    bind(mv, "--max-ratio", "meanvalue", "max_ratio", "lhs/rhs gate");

    auto* cnd = app.add_subcommand("conditions", "thin-set and coefficient-growth condition checks");
    bind(cnd, "--check", "conditions", "check", "growth|thinness");
    bind(cnd, "--xmax", "conditions", "x_max", "grid endpoint");
    bind(cnd, "--diff", "conditions", "diff", "const:C | single:p | pair");
    bind(cnd, "--E", "conditions", "E", "none | mod4:r | below:N | list:p1;p2");
    bind(cnd, "--delta", "conditions", "delta", "thinness exponent parameter");
    bind(cnd, "--ceiling", "conditions", "ceiling", "thinness constant ceiling");
    bind(cnd, "--expect", "conditions", "expect", "pass|fail (thinness)");
    bind(cnd, "--r1-lo", "conditions", "r1_lo", "growth ratio-1 lower gate");
    bind(cnd, "--r1-hi", "conditions", "r1_hi", "growth ratio-1 upper gate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Config cfg = default_config();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot open config: " + config_path);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            cfg.apply(Config::parse(text));
        }
        for (const auto& ov : overrides)
            if (ov.opt->count() > 0) cfg.set(ov.section, ov.key, ov.value);
        if (!out_dir.empty()) cfg.set("output", "dir", out_dir);
        if (cfg.get("meta", "schema_version", "1") != "1")
            throw ConfigError("config: unsupported schema_version (this binary supports 1)");

        if (emit->parsed()) {
            std::string text = default_config().emit();
            if (emit_path.empty())
                std::fputs(text.c_str(), stdout);
            else
                write_text_file(emit_path, text);
            return 0;
        }
        if (zeros->parsed()) return run_zeros(cfg);
        if (vef->parsed()) return run_verify_ef(cfg);
        if (dec->parsed()) return run_decay(cfg);
        if (deg->parsed()) return run_degree_test(cfg);
        if (prb->parsed()) return run_probe(cfg);
        if (mv->parsed()) return run_meanvalue(cfg);
        if (cnd->parsed()) return run_conditions(cfg);
        std::fprintf(stderr, "no subcommand\n");
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
}
