// aqt: statistics, tables, enumerations and verification for affine
// permutations, extended Shi arrangements and the Ish arrangement.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aqt/io.hpp"

namespace {

using namespace aqt;

enum class Format { pretty, json_out, csv };

struct Global {
    Format format = Format::pretty;
    std::uint64_t seed = 20260809;
    Int budget = 1'000'000;
    bool budget_set = false;
};

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

std::vector<Window> table_windows(int n, int m, bool negative, bool positive_only, Int budget) {
    const Int p = negative ? static_cast<Int>(m) * n - 1 : static_cast<Int>(m) * n + 1;
    Int size = 1;
    for (int i = 1; i < n; ++i) size *= p;
    if (size > budget)
        throw Error("BudgetExceeded", "simplex holds " + std::to_string(size) +
                                          " alcoves, budget is " + std::to_string(budget));
    std::vector<Window> ws = enumerate_simplex(SimplexSpec::make(n, p));
    if (positive_only) ws = dominant_inverse_filter(ws);
    return ws;
}

void print_matrix_pretty(const std::vector<std::vector<BigInt>>& mat) {
    std::cout << "shi\\ish";
    if (!mat.empty())
        for (size_t c = 0; c < mat.front().size(); ++c) std::cout << ' ' << c;
    std::cout << '\n';
    for (size_t r = 0; r < mat.size(); ++r) {
        std::cout << r << ':';
        for (const BigInt& v : mat[r]) std::cout << ' ' << v;
        std::cout << '\n';
    }
}

int cmd_stat(const Global& g, int n, const std::string& window_text) {
    const Window w = parse_window(n, window_text);
    const json rec = stat_record_json(w);
    if (g.format == Format::pretty) {
        std::cout << "window " << format_window(w) << ": length " << rec["length"] << ", shi "
                  << rec["shi"] << ", ish " << rec["ish"] << ", ish_inv " << rec["ish_inv"]
                  << ", inversion partition " << rec["inversion_partition"].dump() << '\n';
    } else {
        print_json(rec);
    }
    return 0;
}

int cmd_table(const Global& g, int n, int m, bool negative, bool positive_only) {
    const auto ws = table_windows(n, m, negative, positive_only, g.budget);
    const GenfunSign sign = negative ? GenfunSign::negative : GenfunSign::positive;
    const QTPoly poly = genfun(ws, m, sign);
    const auto mat = matrix_view(poly, static_cast<int>(genfun_t_offset(n, m, sign)));
    switch (g.format) {
        case Format::csv: std::cout << matrix_csv(mat); break;
        case Format::json_out:
            print_json(json{{"n", n},
                            {"m", m},
                            {"sign", negative ? "negative" : "positive"},
                            {"positive_only", positive_only},
                            {"offset", genfun_t_offset(n, m, sign)},
                            {"matrix", matrix_json(mat)}});
            break;
        case Format::pretty: print_matrix_pretty(mat); break;
    }
    return 0;
}

int cmd_genfun(const Global& g, int n, int m, bool negative, bool positive_only) {
    const auto ws = table_windows(n, m, negative, positive_only, g.budget);
    const GenfunSign sign = negative ? GenfunSign::negative : GenfunSign::positive;
    const QTPoly poly = genfun(ws, m, sign);
    if (g.format == Format::pretty)
        std::cout << poly.str() << '\n';
    else if (g.format == Format::csv)
        std::cout << matrix_csv(matrix_view(poly, static_cast<int>(genfun_t_offset(n, m, sign))));
    else
        print_json(qtpoly_json(poly));
    return 0;
}

int cmd_enumerate(const Global& g, int n, Int p, bool dominant_only) {
    Int size = 1;
    for (int i = 1; i < n; ++i) size *= p;
    if (size > g.budget)
        throw Error("BudgetExceeded", "simplex holds " + std::to_string(size) +
                                          " alcoves, budget is " + std::to_string(g.budget));
    std::vector<Window> ws = enumerate_simplex(SimplexSpec::make(n, p));
    if (dominant_only) ws = dominant_inverse_filter(ws);
    if (g.format == Format::pretty || g.format == Format::csv) {
        for (const Window& w : ws) std::cout << format_window(w) << '\n';
    } else {
        json alcoves = json::array();
        for (const Window& w : ws) alcoves.push_back(window_json(w));
        print_json(json{{"n", n}, {"p", p}, {"alcoves", std::move(alcoves)}});
    }
    return 0;
}

int cmd_charpoly(const Global& g, const std::string& family, int n, int m, bool with_counts) {
    const Arrangement arr = build_arrangement(family, n, m);
    const Int budget = g.budget_set ? g.budget : kDefaultCharpolyBudget;
    const QPoly chi = charpoly_ff(arr, budget);
    json rec{{"family", family}, {"n", n}};
    if (family == "shi_m") rec["m"] = m;
    rec["coeffs"] = qpoly_json(chi)["coeffs"];
    if (with_counts) {
        const auto [chambers, bounded] = zaslavsky_counts(chi, n);
        rec["chambers"] = chambers;
        rec["bounded"] = bounded;
    }
    if (g.format == Format::pretty) {
        std::cout << "chi(" << family << (family == "shi_m" ? "[m=" + std::to_string(m) + "]" : "")
                  << "(" << n << "), q) = " << chi.str() << '\n';
        if (with_counts)
            std::cout << "chambers " << rec["chambers"] << ", bounded " << rec["bounded"] << '\n';
    } else {
        print_json(rec);
    }
    return 0;
}

int cmd_bijection(const Global& g, int n, const std::string& window_text) {
    const Window w = parse_window(n, window_text);
    const LabeledPath p = to_labeled_path(w);
    if (g.format == Format::pretty) {
        std::cout << "window " << format_window(w) << " -> w = ";
        for (int v : p.w.images()) std::cout << v << ' ';
        std::cout << "\n" << render_labeled_path(p);
        std::cout << "shi " << shi(w) << ", ish " << ish_closed(w) << ", area' " << area_prime(p)
                  << ", bounce " << bounce(p.ideal) << '\n';
    } else {
        json rec = labeled_path_json(p);
        rec["shi"] = shi(w);
        rec["ish"] = ish_closed(w);
        rec["area_prime"] = area_prime(p);
        rec["bounce"] = bounce(p.ideal);
        print_json(rec);
    }
    return 0;
}

int cmd_counts_census(const Global& g, int n, int m) {
    const ChamberCensus census = census_chambers(n, m);
    if (g.format == Format::csv || g.format == Format::pretty) {
        std::cout << census_csv(census);
    } else {
        json rows = json::array();
        for (const ChamberRecord& r : census.records)
            rows.push_back(json{{"min_window", window_json(r.min_alcove)},
                                {"length", r.min_length},
                                {"bounded", r.bounded}});
        print_json(json{{"n", n}, {"m", m}, {"chambers", std::move(rows)}});
    }
    return 0;
}

int cmd_verify(const Global& g, const std::string& suite, int n_max, Int cases) {
    SuiteOptions opt;
    opt.n_max = n_max;
    opt.cases = cases;
    opt.seed = g.seed;
    if (g.budget_set) opt.budget = g.budget;
    const VerificationReport report = run_suite(suite, opt);
    if (g.format == Format::json_out)
        print_json(report_json(report));
    else
        std::cout << report_text(report);
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of affine permutations and Shi/Ish arrangements"};
    app.require_subcommand(1);

    Global g;
    bool flag_json = false, flag_csv = false, flag_pretty = false;
    app.add_flag("--json", flag_json, "machine-readable JSON output");
    app.add_flag("--csv", flag_csv, "CSV output where applicable");
    app.add_flag("--pretty", flag_pretty, "human-readable output (default)");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    auto* budget_opt = app.add_option("--budget", g.budget, "operation cap for enumerations");

    int n = 3, m = 1, n_max = 0;
    Int p = 2, cases = 10'000;
    std::string window_text, family = "shi", suite;
    bool negative = false, positive_only = false, dominant_only = false;

    auto* stat = app.add_subcommand("stat", "statistics of one affine permutation");
    stat->add_option("--n", n, "rank")->required();
    stat->add_option("--window", window_text, "comma-separated window, e.g. \"1,5,0\"")->required();

    auto* table = app.add_subcommand("table", "joint (shi_m, ish_inv) matrix over a simplex");
    table->add_option("--n", n, "rank")->required();
    table->add_option("--m", m, "extension level");
    table->add_flag("--negative", negative, "use the (mn-1)-dilation simplex");
    table->add_flag("--positive-only", positive_only, "restrict to dominant-inverse alcoves");

    auto* gf = app.add_subcommand("genfun", "bivariate generating function over a simplex");
    gf->add_option("--n", n, "rank")->required();
    gf->add_option("--m", m, "extension level");
    gf->add_flag("--negative", negative, "use the (mn-1)-dilation simplex");
    gf->add_flag("--positive-only", positive_only, "restrict to dominant-inverse alcoves");

    auto* enumerate = app.add_subcommand("enumerate", "alcoves of a Sommers simplex D^p(n)");
    enumerate->add_option("--n", n, "rank")->required();
    enumerate->add_option("--p", p, "dilation, coprime to n")->required();
    enumerate->add_flag("--dominant-inverse", dominant_only, "keep dominant-inverse alcoves only");

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial by finite-field counts");
    charpoly->add_option("--family", family, "cox | shi | shi_m | ish")->required();
    charpoly->add_option("--n", n, "rank")->required();
    charpoly->add_option("--m", m, "extension level for shi_m");

    auto* counts = app.add_subcommand("counts", "charpoly plus Zaslavsky chamber counts");
    counts->add_option("--family", family, "cox | shi | shi_m | ish")->required();
    counts->add_option("--n", n, "rank")->required();
    counts->add_option("--m", m, "extension level for shi_m");

    auto* census = app.add_subcommand("census", "chamber census of the m-extended Shi arrangement");
    census->add_option("--n", n, "rank")->required();
    census->add_option("--m", m, "extension level");

    auto* bijection = app.add_subcommand("bijection", "labeled Dyck path of a representing alcove");
    bijection->add_option("--n", n, "rank")->required();
    bijection->add_option("--window", window_text, "comma-separated window")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--n-max", n_max, "largest rank to test (0 = suite default)");
    verify->add_option("--cases", cases, "randomized-case budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    g.budget_set = budget_opt->count() > 0;
    const int chosen = flag_json + flag_csv + flag_pretty;
    if (chosen > 1) {
        std::cerr << "error: pick at most one of --json, --csv, --pretty\n";
        return 2;
    }
    g.format = flag_json ? Format::json_out : flag_csv ? Format::csv : Format::pretty;

    try {
        if (stat->parsed()) return cmd_stat(g, n, window_text);
        if (table->parsed()) return cmd_table(g, n, m, negative, positive_only);
        if (gf->parsed()) return cmd_genfun(g, n, m, negative, positive_only);
        if (enumerate->parsed()) return cmd_enumerate(g, n, p, dominant_only);
        if (charpoly->parsed()) return cmd_charpoly(g, family, n, m, false);
        if (counts->parsed()) return cmd_charpoly(g, family, n, m, true);
        if (census->parsed()) return cmd_counts_census(g, n, m);
        if (bijection->parsed()) return cmd_bijection(g, n, window_text);
        if (verify->parsed()) return cmd_verify(g, suite, n_max, cases);
    } catch (const aqt::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
