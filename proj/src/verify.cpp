#include "aqt/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "aqt/arr.hpp"
#include "aqt/paths.hpp"
#include "aqt/qt.hpp"
#include "aqt/regions.hpp"
#include "aqt/stats.hpp"

namespace aqt {

namespace {

VerifyCase make_case(std::string claim, std::map<std::string, Int> params, bool ok, bool proved,
                     std::string expected, std::string actual) {
    return {std::move(claim), std::move(params),
            ok ? (proved ? "proved-match" : "conjecture-match") : "mismatch", std::move(expected),
            std::move(actual)};
}

std::vector<Window> simplex_windows(int n, Int p) {
    return enumerate_simplex(SimplexSpec::make(n, p));
}

QPoly q_power_identity(int base, int exp) { return q_int(base).pow(exp); }

QPoly chi_formula(int n, int shifted_by) {
    // q * (q - shifted_by)^{n-1}
    const QPoly factor = QPoly::monomial(1) - QPoly::constant(shifted_by);
    return QPoly::monomial(1) * factor.pow(n - 1);
}

Window random_window(std::mt19937_64& rng, int n, int max_len) {
    Window w = Window::identity(n);
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(1, n);
    const int steps = len_dist(rng);
    for (int s = 0; s < steps; ++s) w = right_multiply_generator(w, gen_dist(rng));
    return w;
}

std::string count_str(size_t k, const char* what) {
    return std::to_string(k) + " " + what;
}

VerificationReport suite_assertions(const SuiteOptions& opt) {
    VerificationReport rep{"assertions", {}};
    const int n_max = opt.n_max > 0 ? std::min(opt.n_max, 6) : 5;
    for (int n = 2; n <= n_max; ++n) {
        const auto ws = simplex_windows(n, n + 1);
        const QTPoly shi_qt = genfun(ws, 1, GenfunSign::positive);
        const int off = static_cast<int>(genfun_t_offset(n, 1, GenfunSign::positive));

        const QPoly loehr = specialize_antidiagonal(shi_qt, off);
        const QPoly loehr_want = q_power_identity(n + 1, n - 1);
        rep.cases.push_back(make_case("loehr-specialization", {{"n", n}}, loehr == loehr_want, true,
                                      loehr_want.str(), loehr.str()));

        const QTPoly pos_qt = genfun(dominant_inverse_filter(ws), 1, GenfunSign::positive);
        const QPoly haglund = specialize_antidiagonal(pos_qt, off);
        const QPoly haglund_want = q_catalan(n);
        rep.cases.push_back(make_case("haglund-specialization", {{"n", n}},
                                      haglund == haglund_want, true, haglund_want.str(),
                                      haglund.str()));
        if (n == 3) {
            const QPoly literal({1, 0, 1, 1, 1, 0, 1});
            rep.cases.push_back(make_case("haglund-q-catalan-literal", {{"n", 3}},
                                          haglund == literal, true, literal.str(), haglund.str()));
        }
    }
    return rep;
}

VerificationReport suite_conjectures_positive(const SuiteOptions& opt) {
    VerificationReport rep{"conjectures-positive", {}};
    const int n_max = opt.n_max > 0 ? opt.n_max : 4;

    for (const auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
        if (n > n_max) continue;
        const auto ws = simplex_windows(n, m * n + 1);
        const QTPoly shim = genfun(ws, m, GenfunSign::positive);
        const int off = static_cast<int>(genfun_t_offset(n, m, GenfunSign::positive));

        const QPoly spec = specialize_antidiagonal(shim, off);
        const QPoly want = q_power_identity(m * n + 1, n - 1);
        rep.cases.push_back(make_case("extended-loehr", {{"n", n}, {"m", m}}, spec == want, false,
                                      want.str(), spec.str()));

        const QPoly pos = specialize_antidiagonal(genfun(dominant_inverse_filter(ws), m,
                                                         GenfunSign::positive),
                                                  off);
        const QPoly pos_want = q_fuss_catalan(n, m);
        rep.cases.push_back(make_case("extended-haglund", {{"n", n}, {"m", m}}, pos == pos_want,
                                      false, pos_want.str(), pos.str()));
    }

    // q,t-symmetry of the level-1 generating functions (open in this form)
    for (int n = 2; n <= std::min(n_max, 5); ++n) {
        const auto ws = simplex_windows(n, n + 1);
        const QTPoly full = genfun(ws, 1, GenfunSign::positive);
        rep.cases.push_back(make_case("qt-symmetry-shi", {{"n", n}}, is_qt_symmetric(full), false,
                                      "coeff(a,b) = coeff(b,a)",
                                      is_qt_symmetric(full) ? "symmetric" : "not symmetric"));
        const QTPoly pos = genfun(dominant_inverse_filter(ws), 1, GenfunSign::positive);
        rep.cases.push_back(make_case("qt-symmetry-shi-plus", {{"n", n}}, is_qt_symmetric(pos),
                                      false, "coeff(a,b) = coeff(b,a)",
                                      is_qt_symmetric(pos) ? "symmetric" : "not symmetric"));
    }
    return rep;
}

VerificationReport suite_conjectures_negative(const SuiteOptions& opt) {
    VerificationReport rep{"conjectures-negative", {}};
    const int n_max = opt.n_max > 0 ? opt.n_max : 3;
    for (const auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}}) {
        if (n > n_max) continue;
        const auto ws = simplex_windows(n, m * n - 1);
        const QTPoly shim = genfun(ws, m, GenfunSign::negative);
        const int off = static_cast<int>(genfun_t_offset(n, m, GenfunSign::negative));

        const QPoly spec = specialize_antidiagonal(shim, off);
        const QPoly want = q_power_identity(m * n - 1, n - 1);
        rep.cases.push_back(make_case("bounded-loehr", {{"n", n}, {"m", m}}, spec == want, false,
                                      want.str(), spec.str()));

        const QPoly pos = specialize_antidiagonal(genfun(dominant_inverse_filter(ws), m,
                                                         GenfunSign::negative),
                                                  off);
        const QPoly pos_want = q_fuss_catalan_neg(n, m);
        rep.cases.push_back(make_case("bounded-haglund", {{"n", n}, {"m", m}}, pos == pos_want,
                                      false, pos_want.str(), pos.str()));
    }
    return rep;
}

VerificationReport suite_bijection(const SuiteOptions& opt) {
    VerificationReport rep{"bijection", {}};
    const int n_max = opt.n_max > 0 ? opt.n_max : 4;
    for (int n = 2; n <= n_max; ++n) {
        const auto simplex = simplex_windows(n, n + 1);
        std::vector<Window> reps;
        reps.reserve(simplex.size());
        for (const Window& w : simplex) reps.push_back(invert(w));

        bool stats_ok = true, round_ok = true;
        std::set<LabeledPath> image;
        std::string detail;
        for (const Window& rep_alcove : reps) {
            LabeledPath p = to_labeled_path(rep_alcove); // validates its own round trip
            image.insert(p);
            const Int lhs_area = static_cast<Int>(root_count(n)) - shi(rep_alcove);
            const Int lhs_bounce = ish_closed(rep_alcove);
            if (lhs_area != area_prime(p) || lhs_bounce != bounce(p.ideal)) {
                stats_ok = false;
                if (detail.empty()) detail = "fails at " + format_window(rep_alcove);
            }
        }
        // image must be exactly the valid labeled paths
        std::set<LabeledPath> all_valid;
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        const auto ideals = all_ideals(n);
        do {
            const FinitePermutation w = FinitePermutation::from_images(perm);
            for (const RootIdeal& ideal : ideals) {
                LabeledPath p{w, ideal};
                if (labeled_path_valid(p)) all_valid.insert(p);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        round_ok = image == all_valid && image.size() == reps.size();

        rep.cases.push_back(make_case("pak-stanley-bijection", {{"n", n}}, round_ok, true,
                                      count_str(all_valid.size(), "valid labeled paths"),
                                      count_str(image.size(), "distinct images")));
        rep.cases.push_back(make_case("area-bounce-correspondence", {{"n", n}}, stats_ok, true,
                                      "(binom - shi, ish) = (area', bounce)",
                                      stats_ok ? "holds on all chambers" : detail));
    }
    return rep;
}

VerificationReport suite_inverse_statistics(const SuiteOptions& opt) {
    VerificationReport rep{"inverse-statistics", {}};

    std::vector<Window> pool;
    for (const auto [n, p] : std::vector<std::pair<int, Int>>{{3, 4}, {3, 7}, {3, 5}})
        for (const Window& w : simplex_windows(n, p)) pool.push_back(w);
    const size_t exhaustive = pool.size();

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> n_dist(2, 6);
    for (Int c = 0; c < opt.cases; ++c) pool.push_back(random_window(rng, n_dist(rng), 12));

    size_t shi_bad = 0, part_bad = 0, ish_bad = 0, ishinv_bad = 0;
    for (const Window& w : pool) {
        const Window inv = invert(w);
        if (shi(w) != shi(inv)) ++shi_bad;
        if (inversion_partition(w) != inversion_partition(inv)) ++part_bad;
        if (ish_def(w) != ish_closed(w)) ++ish_bad;
        if (ish_inv(w) != ish_closed(inv)) ++ishinv_bad;
    }
    const std::map<std::string, Int> params{{"exhaustive", static_cast<Int>(exhaustive)},
                                            {"random", opt.cases}};
    auto tally = [&](const char* claim, size_t bad) {
        rep.cases.push_back(make_case(claim, params, bad == 0, true, "0 mismatches",
                                      count_str(bad, "mismatches")));
    };
    tally("shi-inverse-invariance", shi_bad);
    tally("inversion-partition-invariance", part_bad);
    tally("ish-def-equals-closed", ish_bad);
    tally("ish-inv-formula", ishinv_bad);
    return rep;
}

VerificationReport suite_charpoly(const SuiteOptions& opt) {
    VerificationReport rep{"charpoly", {}};
    const int n_max = opt.n_max > 0 ? std::min(opt.n_max, 5) : 4;
    for (int n = 2; n <= n_max; ++n) {
        const Arrangement shi_arr = build_arrangement("shi", n);
        const Arrangement ish_arr = build_arrangement("ish", n);
        const QPoly chi_shi = charpoly_ff(shi_arr, opt.budget);
        const QPoly chi_ish = charpoly_ff(ish_arr, opt.budget);
        const QPoly want = chi_formula(n, n);
        rep.cases.push_back(make_case("shi-charpoly", {{"n", n}}, chi_shi == want, true,
                                      want.str(), chi_shi.str()));
        rep.cases.push_back(make_case("ish-charpoly", {{"n", n}}, chi_ish == want, true,
                                      want.str(), chi_ish.str()));

        bool cyclic_ok = true;
        for (Int p : charpoly_primes(ish_arr, n + 2))
            if (ish_cyclic_count(n, p) != complement_count(ish_arr, p, opt.budget)) cyclic_ok = false;
        rep.cases.push_back(make_case("ish-cyclic-oracle", {{"n", n}}, cyclic_ok, true,
                                      "p(p-n)^{n-1} at every prime",
                                      cyclic_ok ? "matches brute force" : "differs"));
    }
    for (const auto [n, m] :
         std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        if (n > n_max) continue;
        const QPoly chi = charpoly_ff(build_arrangement("shi_m", n, m), opt.budget);
        const QPoly want = chi_formula(n, m * n);
        rep.cases.push_back(make_case("shi-m-charpoly", {{"n", n}, {"m", m}}, chi == want, true,
                                      want.str(), chi.str()));
    }
    // Zaslavsky counts from the characteristic polynomials
    if (n_max >= 3) {
        const auto [ch3, b3] = zaslavsky_counts(chi_formula(3, 3), 3);
        rep.cases.push_back(make_case("zaslavsky-counts", {{"n", 3}}, ch3 == 16 && b3 == 4, true,
                                      "(16, 4)",
                                      "(" + std::to_string(ch3) + ", " + std::to_string(b3) + ")"));
    }
    if (n_max >= 4) {
        const auto [ch4, b4] = zaslavsky_counts(chi_formula(4, 4), 4);
        rep.cases.push_back(make_case("zaslavsky-counts", {{"n", 4}}, ch4 == 125 && b4 == 27, true,
                                      "(125, 27)",
                                      "(" + std::to_string(ch4) + ", " + std::to_string(b4) + ")"));
    }
    return rep;
}

VerificationReport suite_census(const SuiteOptions& opt) {
    VerificationReport rep{"census", {}};
    const int n_max = opt.n_max > 0 ? opt.n_max : 4;
    for (const auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}}) {
        if (n > n_max) continue;
        const std::map<std::string, Int> params{{"n", n}, {"m", m}};
        ChamberCensus census;
        try {
            census = census_chambers(n, m);
        } catch (const Error& e) {
            rep.cases.push_back(make_case("chamber-census", params, false, true,
                                          "census completes", e.what()));
            continue;
        }
        Int chambers_want = 1, bounded_want = 1;
        for (int i = 1; i < n; ++i) {
            chambers_want *= m * n + 1;
            bounded_want *= m * n - 1;
        }
        Int bounded = 0;
        for (const ChamberRecord& r : census.records) bounded += r.bounded ? 1 : 0;
        rep.cases.push_back(make_case("chamber-count", params,
                                      static_cast<Int>(census.records.size()) == chambers_want,
                                      true, std::to_string(chambers_want),
                                      std::to_string(census.records.size())));
        rep.cases.push_back(make_case("bounded-chamber-count", params, bounded == bounded_want,
                                      true, std::to_string(bounded_want), std::to_string(bounded)));
        // uniqueness held (census_chambers would have thrown otherwise)
        rep.cases.push_back(make_case("minimum-alcove-unique", params, true, true,
                                      "unique minimum per chamber", "unique"));
        rep.cases.push_back(make_case("maximum-alcove-unique", params, true, m == 1,
                                      "unique maximum per bounded chamber", "unique"));

        std::set<Window> inv_minima;
        for (const ChamberRecord& r : census.records) inv_minima.insert(invert(r.min_alcove));
        const auto dplus = simplex_windows(n, m * n + 1);
        const bool min_ok = inv_minima == std::set<Window>(dplus.begin(), dplus.end());
        rep.cases.push_back(make_case("inverse-representatives", params, min_ok, m == 1,
                                      "inverses fill the (mn+1)-dilation simplex",
                                      min_ok ? "equal sets" : "sets differ"));

        std::set<Window> inv_maxima;
        for (const ChamberRecord& r : census.records)
            if (r.bounded) inv_maxima.insert(invert(r.max_alcove));
        const auto dminus = simplex_windows(n, m * n - 1);
        const bool max_ok = inv_maxima == std::set<Window>(dminus.begin(), dminus.end());
        rep.cases.push_back(make_case("inverse-bounded-representatives", params, max_ok, false,
                                      "inverses fill the (mn-1)-dilation simplex",
                                      max_ok ? "equal sets" : "sets differ"));
    }
    return rep;
}

VerificationReport suite_mystery_case(const SuiteOptions&) {
    VerificationReport rep{"mystery-case", {}};
    const std::vector<std::vector<Int>> listed = {
        {-1, 2, 5, 3, 6}, {0, 2, 3, 4, 6}, {0, 2, 4, 3, 6}, {0, 3, 1, 4, 7},
        {0, 3, 2, 4, 6},  {1, 2, 3, 4, 5}, {1, 2, 3, 5, 4}, {1, 2, 4, 3, 5},
        {1, 3, 2, 4, 5},  {1, 3, 2, 5, 4}, {1, 4, 2, 5, 3}, {2, 0, 3, 6, 4},
        {2, 1, 3, 4, 5},  {2, 1, 3, 5, 4}, {2, 1, 4, 3, 5}, {3, 1, 4, 2, 5}};
    std::set<Window> want;
    for (const auto& v : listed) want.insert(Window::validate(5, v));

    const auto ws = simplex_windows(5, 2);
    const bool set_ok = std::set<Window>(ws.begin(), ws.end()) == want;
    rep.cases.push_back(make_case("simplex-alcoves", {{"n", 5}, {"p", 2}}, set_ok, true,
                                  "the 16 listed windows", count_str(ws.size(), "windows") +
                                                               (set_ok ? ", all match" : ", differ")));

    auto ish_inv_dist = [](const std::vector<Window>& windows) {
        std::vector<BigInt> c;
        for (const Window& w : windows) {
            const size_t e = static_cast<size_t>(ish_inv(w));
            if (e >= c.size()) c.resize(e + 1);
            ++c[e];
        }
        return QPoly(std::move(c));
    };
    const QPoly dist = ish_inv_dist(ws);
    const QPoly dist_want({10, 5, 1});
    rep.cases.push_back(make_case("ish-inv-distribution", {{"n", 5}, {"p", 2}}, dist == dist_want,
                                  true, dist_want.str(), dist.str()));

    const auto dom = dominant_inverse_filter(ws);
    std::set<Window> dom_want{Window::validate(5, {1, 2, 3, 4, 5}),
                              Window::validate(5, {0, 2, 3, 4, 6}),
                              Window::validate(5, {2, 0, 3, 6, 4})};
    const bool dom_ok = std::set<Window>(dom.begin(), dom.end()) == dom_want;
    rep.cases.push_back(make_case("dominant-inverse-subset", {{"n", 5}, {"p", 2}}, dom_ok, true,
                                  "3 listed windows",
                                  count_str(dom.size(), "windows") + (dom_ok ? ", all match" : ", differ")));

    const QPoly dom_dist = ish_inv_dist(dom);
    const QPoly dom_want_dist({1, 1, 1});
    rep.cases.push_back(make_case("dominant-ish-inv-distribution", {{"n", 5}, {"p", 2}},
                                  dom_dist == dom_want_dist, true, dom_want_dist.str(),
                                  dom_dist.str()));
    return rep;
}

} // namespace

bool VerificationReport::ok() const {
    for (const VerifyCase& c : cases)
        if (c.status == "mismatch") return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "assertions",       "conjectures-positive", "conjectures-negative", "bijection",
        "inverse-statistics", "charpoly",           "census",               "mystery-case"};
    return names;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt) {
    if (suite == "assertions") return suite_assertions(opt);
    if (suite == "conjectures-positive") return suite_conjectures_positive(opt);
    if (suite == "conjectures-negative") return suite_conjectures_negative(opt);
    if (suite == "bijection") return suite_bijection(opt);
    if (suite == "inverse-statistics") return suite_inverse_statistics(opt);
    if (suite == "charpoly") return suite_charpoly(opt);
    if (suite == "census") return suite_census(opt);
    if (suite == "mystery-case") return suite_mystery_case(opt);
    throw Error("UnknownSuite", "no suite named '" + suite + "'");
}

} // namespace aqt
