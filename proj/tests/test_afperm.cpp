#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <set>

#include "aqt/window.hpp"

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

// All group elements with length <= radius, by breadth-first search.
std::set<Window> ball(int n, int radius) {
    std::set<Window> seen{Window::identity(n)};
    std::queue<std::pair<Window, int>> frontier;
    frontier.push({Window::identity(n), 0});
    while (!frontier.empty()) {
        auto [w, d] = frontier.front();
        frontier.pop();
        if (d == radius) continue;
        for (int i = 1; i <= n; ++i) {
            Window nb = right_multiply_generator(w, i);
            if (seen.insert(nb).second) frontier.push({std::move(nb), d + 1});
        }
    }
    return seen;
}

Window random_window(std::mt19937_64& rng, int n, int max_len) {
    Window w = Window::identity(n);
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, n);
    for (int s = len(rng); s > 0; --s) w = right_multiply_generator(w, gen(rng));
    return w;
}

} // namespace

TEST_CASE("window validation") {
    CHECK_NOTHROW(win({1, 5, 0}));
    CHECK_NOTHROW(win({1, 2, 3}));
    CHECK(kind_of([] { win({1, 4, 0}); }) == "BadSum");
    CHECK(kind_of([] { Window::validate(3, {1, 2}); }) == "BadLength");
    CHECK(kind_of([] { win({0, 3, 3}); }) == "BadResidues");
    CHECK(kind_of([] { Window::validate(0, {}); }) == "BadRank");
    CHECK(kind_of([] { parse_window(3, "1,x,0"); }) == "BadWindowText");
    CHECK(parse_window(3, " 1, 5, 0") == win({1, 5, 0}));
    CHECK(format_window(win({1, -1, 6})) == "1,-1,6");
}

TEST_CASE("periodic application") {
    const Window w = win({1, 5, 0});
    CHECK(apply(w, 2) == 5);
    CHECK(apply(w, 4) == 4);
    CHECK(apply(w, 0) == -3);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Window r = random_window(rng, 2 + t % 4, 9);
        for (Int k = -6; k <= 6; ++k) CHECK(apply(r, k + r.rank()) == apply(r, k) + r.rank());
    }
}

TEST_CASE("composition and the product convention") {
    const Window id = Window::identity(3);
    CHECK(compose(id, win({1, 5, 0})) == win({1, 5, 0}));
    CHECK(compose(win({1, 5, 0}), invert(win({1, 5, 0}))) == id);

    // w = u(s(.)) for the parabolic pair: [-1,4,3] = [-1,3,4] after [1,3,2]
    const Window u = win({-1, 3, 4});
    const Window s = Window::lift(FinitePermutation::from_images({1, 3, 2}));
    CHECK(compose(u, s) == win({-1, 4, 3}));

    CHECK(kind_of([&] { compose(id, Window::identity(4)); }) == "RankMismatch");
}

TEST_CASE("inversion of windows") {
    CHECK(invert(win({-2, 2, 6})) == win({4, 2, 0}));
    CHECK(invert(Window::identity(4)) == Window::identity(4));
    CHECK(invert(win({1, 5, 0})) == win({1, -1, 6}));
    CHECK(compose(win({1, 5, 0}), win({1, -1, 6})) == Window::identity(3));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const Window w = random_window(rng, 2 + t % 5, 10);
        CHECK(invert(invert(w)) == w);
        CHECK(compose(w, invert(w)) == Window::identity(w.rank()));
    }
}

TEST_CASE("affine inversions and length") {
    const auto inv = inversions(win({1, 5, 0}));
    const std::vector<AffineTransposition> want{{1, 3}, {2, 3}, {2, 4}, {2, 6}};
    CHECK(inv == want);
    CHECK(length(win({1, 5, 0})) == 4);

    CHECK(inversions(Window::identity(3)).empty());
    CHECK(inversions(win({0, 2, 4})) == std::vector<AffineTransposition>{{3, 4}});

    // length is inversion-invariant: exhaustive on balls of radius 8, n <= 4
    for (int n = 2; n <= 4; ++n)
        for (const Window& w : ball(n, 8)) {
            CHECK(length(w) == static_cast<Int>(inversions(w).size()));
            CHECK(length(w) == length(invert(w)));
        }
}

TEST_CASE("parabolic decomposition") {
    const auto [s, u] = parabolic_decompose(win({-1, 4, 3}));
    CHECK(s == FinitePermutation::from_images({1, 3, 2}));
    CHECK(u == win({-1, 3, 4}));

    const auto [si, ui] = parabolic_decompose(Window::identity(3));
    CHECK(si.is_identity());
    CHECK(ui.is_identity());

    const auto [s2, u2] = parabolic_decompose(win({1, 5, 0}));
    CHECK(u2 == win({0, 1, 5}));

    std::mt19937_64 rng(13);
    for (int t = 0; t < 500; ++t) {
        const Window w = random_window(rng, 2 + t % 5, 10);
        const auto [sorter, rep] = parabolic_decompose(w);
        CHECK(std::is_sorted(rep.values().begin(), rep.values().end()));
        for (int k = 1; k <= w.rank(); ++k) CHECK(w(k) == rep(sorter(k)));
        // minimal coset representative has no inversion with both ends in the window
        for (const AffineTransposition& t2 : inversions(rep)) CHECK(t2.j > rep.rank());
    }
}

TEST_CASE("translation decomposition") {
    const auto [p, r] = translation_decompose(win({-2, 2, 6}));
    CHECK(p.is_identity());
    CHECK(r.r == std::vector<Int>{-1, 0, 1});

    const auto [pi, ri] = translation_decompose(Window::identity(5));
    CHECK(pi.is_identity());
    CHECK(ri.r == std::vector<Int>(5, 0));

    const auto [p2, r2] = translation_decompose(win({4, 2, 0}));
    CHECK(p2.is_identity());
    CHECK(r2.r == std::vector<Int>{1, 0, -1});

    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) {
        const Window w = random_window(rng, 2 + t % 5, 10);
        const auto [perm, root] = translation_decompose(w);
        Int sum = 0;
        for (int i = 1; i <= w.rank(); ++i) {
            CHECK(w(i) == perm(i) + w.rank() * root.r[static_cast<size_t>(i) - 1]);
            sum += root.r[static_cast<size_t>(i) - 1];
        }
        CHECK(sum == 0);
    }
}

TEST_CASE("hyperplane of a transposition") {
    CHECK(transposition_hyperplane({3, 4}, 3) == std::pair{PositiveRoot{1, 3}, Int{1}});
    CHECK(transposition_hyperplane({1, 2}, 3) == std::pair{PositiveRoot{1, 2}, Int{0}});
    CHECK(transposition_hyperplane({2, 6}, 3) == std::pair{PositiveRoot{2, 3}, Int{-1}});
    // generators: s_i at level 0, s_n at level 1
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i < n; ++i)
            CHECK(transposition_hyperplane({i, i + 1}, n) == std::pair{PositiveRoot{i, i + 1}, Int{0}});
        CHECK(transposition_hyperplane({n, n + 1}, n) == std::pair{PositiveRoot{1, n}, Int{1}});
    }
}
