#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "aqt/arr.hpp"

using namespace aqt;

namespace {

std::string kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

QPoly chi_formula(int n, int c) {
    return QPoly::monomial(1) * (QPoly::monomial(1) - QPoly::constant(c)).pow(n - 1);
}

} // namespace

TEST_CASE("arrangement families") {
    const Arrangement ish3 = build_arrangement("ish", 3);
    CHECK(ish3.hyperplanes.size() == 6);
    CHECK(std::count_if(ish3.hyperplanes.begin(), ish3.hyperplanes.end(),
                        [](const Hyperplane& h) { return h.level != 0; }) == 3);
    CHECK(std::find(ish3.hyperplanes.begin(), ish3.hyperplanes.end(), Hyperplane{1, 3, 2}) !=
          ish3.hyperplanes.end());

    CHECK(build_arrangement("shi", 3).hyperplanes.size() == 6);
    CHECK(build_arrangement("shi_m", 3, 2).hyperplanes.size() == 12);
    CHECK(build_arrangement("cox", 4).hyperplanes.size() == 6);
    CHECK(kind_of([] { build_arrangement("aff", 3); }) == "UnknownFamily");
}

TEST_CASE("characteristic polynomials over finite fields") {
    CHECK(charpoly_ff(build_arrangement("ish", 3)) == chi_formula(3, 3));
    CHECK(charpoly_ff(build_arrangement("shi", 3)) == chi_formula(3, 3));
    CHECK(charpoly_ff(build_arrangement("ish", 3)).coeffs() ==
          std::vector<BigInt>{0, 9, -6, 1});

    // Coxeter: falling factorial q(q-1)(q-2)
    CHECK(charpoly_ff(build_arrangement("cox", 3)) ==
          QPoly::monomial(1) * (QPoly::monomial(1) - QPoly::constant(1)) *
              (QPoly::monomial(1) - QPoly::constant(2)));

    for (int n = 2; n <= 4; ++n) {
        const QPoly want = chi_formula(n, n);
        CHECK(charpoly_ff(build_arrangement("shi", n)) == want);
        CHECK(charpoly_ff(build_arrangement("ish", n)) == want);
    }
    for (const auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
        CHECK(charpoly_ff(build_arrangement("shi_m", n, m)) == chi_formula(n, m * n));
}

TEST_CASE("prime choice does not matter") {
    const Arrangement ish3 = build_arrangement("ish", 3);
    const QPoly a = charpoly_ff(ish3, kDefaultCharpolyBudget, {11, 13, 17, 19});
    const QPoly b = charpoly_ff(ish3, kDefaultCharpolyBudget, {23, 29, 31, 37});
    CHECK(a == b);

    // too few primes, or an inconsistent point set, is an error
    CHECK(kind_of([&] { charpoly_ff(ish3, kDefaultCharpolyBudget, {11, 13}); }) ==
          "InsufficientPrimes");
    // primes that collapse hyperplanes give counts off the polynomial
    CHECK(kind_of([&] { charpoly_ff(ish3, kDefaultCharpolyBudget, {2, 3, 5, 7, 11}); }) ==
          "InsufficientPrimes");
}

TEST_CASE("budget guard") {
    CHECK(kind_of([] { charpoly_ff(build_arrangement("shi", 5), 1000); }) == "BudgetExceeded");
}

TEST_CASE("cyclic counting oracle for the Ish complement") {
    CHECK(ish_cyclic_count(3, 7) == 112);
    CHECK(ish_cyclic_count(2, 5) == 15);
    for (int n = 2; n <= 4; ++n) CHECK(ish_cyclic_count(n, n + 1) == n + 1);

    for (int n = 2; n <= 4; ++n) {
        const Arrangement ish = build_arrangement("ish", n);
        for (Int p : charpoly_primes(ish, n + 2))
            CHECK(ish_cyclic_count(n, p) == complement_count(ish, p));
    }
    // brute force over F_7^3 directly
    CHECK(complement_count(build_arrangement("ish", 3), 7) == 112);
}

TEST_CASE("zaslavsky counts") {
    CHECK(zaslavsky_counts(chi_formula(3, 3), 3) == std::pair<Int, Int>{16, 4});
    CHECK(zaslavsky_counts(chi_formula(4, 8), 4) == std::pair<Int, Int>{729, 343});
    CHECK(zaslavsky_counts(QPoly::monomial(1) * (QPoly::monomial(1) - QPoly::constant(1)), 2) ==
          std::pair<Int, Int>{2, 0});
    CHECK(zaslavsky_counts(chi_formula(4, 4), 4) == std::pair<Int, Int>{125, 27});
}
