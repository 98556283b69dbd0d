#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>

#include "aqt/paths.hpp"
#include "aqt/regions.hpp"

using namespace aqt;

namespace {

Window win(std::vector<Int> v) { return Window::validate(static_cast<int>(v.size()), std::move(v)); }

std::string kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

RootIdeal figure_ideal() {
    return ideal_from_minimal_roots(9, {{1, 4}, {2, 6}, {6, 7}, {7, 9}});
}

const Int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};

} // namespace

TEST_CASE("ideal closure and valleys") {
    const RootIdeal fig = figure_ideal();
    CHECK(fig.size() == 23);
    const std::vector<PositiveRoot> gens{{1, 4}, {2, 6}, {6, 7}, {7, 9}};
    CHECK(valleys(fig) == gens);

    CHECK(ideal_from_minimal_roots(3, {}).size() == 0);
    const RootIdeal closure = ideal_from_minimal_roots(3, {{1, 2}});
    CHECK(closure.contains({1, 2}));
    CHECK(closure.contains({1, 3}));
    CHECK_FALSE(closure.contains({2, 3}));

    CHECK(valleys(RootIdeal::full(3)) == std::vector<PositiveRoot>{{1, 2}, {2, 3}});
    CHECK(valleys(RootIdeal(4)).empty());

    CHECK(kind_of([] { ideal_from_minimal_roots(4, {{1, 3}, {1, 4}}); }) == "ComparableGenerators");
    CHECK(kind_of([] { RootIdeal::from_members(3, {{2, 3}}); }) == "NotAnIdeal");

    for (int n = 2; n <= 6; ++n)
        for (const RootIdeal& ideal : all_ideals(n))
            CHECK(ideal_from_minimal_roots(n, valleys(ideal)) == ideal);
}

TEST_CASE("ideal enumeration is Catalan") {
    for (int n = 1; n <= 8; ++n)
        CHECK(static_cast<Int>(all_ideals(n).size()) == catalan[n]);
}

TEST_CASE("bounce statistic") {
    CHECK(bounce(figure_ideal()) == 15);
    // the empty ideal is the full-area path (bounce 0); the full ideal hugs
    // the diagonal and bounces off every point
    for (int n = 2; n <= 7; ++n) {
        CHECK(bounce(RootIdeal(n)) == 0);
        CHECK(bounce(RootIdeal::full(n)) == static_cast<Int>(n) * (n - 1) / 2);
    }
    // rank 3 by hand
    CHECK(bounce(ideal_from_minimal_roots(3, {{1, 3}})) == 1);
    CHECK(bounce(ideal_from_minimal_roots(3, {{1, 2}})) == 1);
    CHECK(bounce(ideal_from_minimal_roots(3, {{1, 2}, {2, 3}})) == 3);
}

TEST_CASE("area prime") {
    const FinitePermutation id5 = FinitePermutation::identity(5);
    for (const RootIdeal& ideal : all_ideals(5))
        CHECK(area_prime({id5, ideal}) == root_count(5) - ideal.size());

    CHECK(area_prime({FinitePermutation::from_images({1, 3, 2}),
                      ideal_from_minimal_roots(3, {{1, 2}})}) == 0);

    // everything above the path: nothing below for any valid labeling
    CHECK(area_prime({FinitePermutation::identity(4), RootIdeal::full(4)}) == 0);

    CHECK(kind_of([] {
              area_prime({FinitePermutation::from_images({1, 3, 2}),
                          ideal_from_minimal_roots(3, {{2, 3}})});
          }) == "InvalidLabeledPath");
}

TEST_CASE("sommers address") {
    const Address fig = sommers_address(figure_ideal());
    const int want[] = {3, 3, 2, 2, 2, 2, 1, 0};
    Int top_row = 0;
    for (int i = 1; i <= 8; ++i) {
        CHECK(fig({i, 9}) == want[i - 1]);
        top_row += fig({i, 9});
    }
    CHECK(top_row == 15);

    CHECK(sommers_address(RootIdeal(3)) == Address(3));
    const Address full = sommers_address(RootIdeal::full(4));
    for (PositiveRoot r : positive_roots(4)) CHECK(full(r) == root_height(r));

    for (int n = 2; n <= 7; ++n)
        for (const RootIdeal& ideal : all_ideals(n)) {
            const Address k = sommers_address(ideal);
            CHECK(is_shi_admissible(k));
            for (PositiveRoot r : positive_roots(n)) CHECK((k(r) >= 1) == ideal.contains(r));
        }
}

TEST_CASE("representing alcove of an ideal matches the direct address") {
    for (int n = 2; n <= 7; ++n)
        for (const RootIdeal& ideal : all_ideals(n)) {
            const Window rep = from_labeled_path({FinitePermutation::identity(n), ideal});
            CHECK(address(rep) == sommers_address(ideal));
            // ish of a positive representing alcove is the top-row sum
            Int top = 0;
            for (int i = 1; i < n; ++i) top += sommers_address(ideal)({i, n});
            CHECK(ish_closed(rep) == top);
            CHECK(ish_closed(rep) == bounce(ideal));
        }
}

TEST_CASE("labeled path of the worked example") {
    // [-1,4,3]: minimal representative [-1,3,4] has address 1 on e12 and e13
    const LabeledPath p = to_labeled_path(win({-1, 4, 3}));
    CHECK(p.w == FinitePermutation::from_images({1, 3, 2}));
    CHECK(p.ideal == ideal_from_minimal_roots(3, {{1, 2}}));
    CHECK(p.ideal.contains({1, 2}));
    CHECK(p.ideal.contains({1, 3}));
    CHECK_FALSE(p.ideal.contains({2, 3}));
    CHECK(from_labeled_path(p) == win({-1, 4, 3}));

    CHECK(to_labeled_path(Window::identity(3)) ==
          LabeledPath{FinitePermutation::identity(3), RootIdeal(3)});
    CHECK(from_labeled_path({FinitePermutation::identity(3), RootIdeal(3)}) ==
          Window::identity(3));

    CHECK(kind_of([] {
              from_labeled_path({FinitePermutation::from_images({1, 3, 2}),
                                 ideal_from_minimal_roots(3, {{2, 3}})});
          }) == "ValleyViolation");

    // an alcove that is not the minimum of its chamber
    CHECK(kind_of([] { to_labeled_path(win({-2, 2, 6})); }) == "NotRepresentingAlcove");
}

TEST_CASE("bijection between chambers and labeled paths") {
    for (int n = 2; n <= 4; ++n) {
        std::set<LabeledPath> image;
        std::vector<Window> reps;
        for (const Window& w : enumerate_simplex(SimplexSpec::make(n, n + 1)))
            reps.push_back(invert(w));
        for (const Window& rep : reps) {
            const LabeledPath p = to_labeled_path(rep);
            CHECK(labeled_path_valid(p));
            CHECK(from_labeled_path(p) == rep);
            image.insert(p);
            CHECK(root_count(n) - shi(rep) == area_prime(p));
            CHECK(ish_closed(rep) == bounce(p.ideal));
        }
        CHECK(image.size() == reps.size());

        std::set<LabeledPath> valid;
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        Int identity_labeled = 0;
        do {
            const FinitePermutation w = FinitePermutation::from_images(perm);
            for (const RootIdeal& ideal : all_ideals(n)) {
                if (labeled_path_valid({w, ideal})) {
                    valid.insert({w, ideal});
                    if (w.is_identity()) ++identity_labeled;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(valid == image);
        CHECK(identity_labeled == catalan[n]);
    }
}

TEST_CASE("path rendering") {
    const std::string art = render_labeled_path(to_labeled_path(win({-1, 4, 3})));
    CHECK(art == "o | ×\no |\n");
}
