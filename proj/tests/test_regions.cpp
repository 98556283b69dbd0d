#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

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

Int binom(Int a, Int b) {
    Int r = 1;
    for (Int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

Int power(Int base, int exp) {
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Independent boundedness oracle: the recession digraph (an arc a -> b for
// each unbounded-side constraint d_a >= d_b, both ways for pinched roots)
// admits a nonzero direction iff it is not strongly connected.
bool bounded_by_scc(const ChamberDescriptor& d) {
    const int n = d.n;
    std::vector<std::vector<int>> fwd(static_cast<size_t>(n)), rev(static_cast<size_t>(n));
    for (PositiveRoot r : positive_roots(n)) {
        const int c = d.clamp[static_cast<size_t>(root_index(n, r))];
        const bool ge = c == d.m;    // d_a >= d_b
        const bool le = c == -d.m;   // d_a <= d_b
        if (ge || (!le)) {           // pinched adds both arcs
            fwd[static_cast<size_t>(r.a) - 1].push_back(r.b - 1);
            rev[static_cast<size_t>(r.b) - 1].push_back(r.a - 1);
        }
        if (le || (!ge)) {
            fwd[static_cast<size_t>(r.b) - 1].push_back(r.a - 1);
            rev[static_cast<size_t>(r.a) - 1].push_back(r.b - 1);
        }
    }
    auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == n;
    };
    return reaches_all(fwd) && reaches_all(rev);
}

} // namespace

TEST_CASE("simplex spec") {
    CHECK(kind_of([] { SimplexSpec::make(4, 2); }) == "NotCoprime");
    const SimplexSpec s = SimplexSpec::make(5, 2);
    CHECK(s.a == 0);
    CHECK(s.b == 2);
    const SimplexSpec t = SimplexSpec::make(3, 7);
    CHECK(t.a == 2);
    CHECK(t.b == 1);
}

TEST_CASE("simplex membership") {
    for (int n = 2; n <= 5; ++n)
        CHECK(simplex_contains(SimplexSpec::make(n, n + 1), Window::identity(n)));
    CHECK(simplex_contains(SimplexSpec::make(5, 2), win({2, 0, 3, 6, 4})));
    CHECK_FALSE(simplex_contains(SimplexSpec::make(5, 2), win({-1, 2, 3, 5, 6})));
    CHECK_FALSE(simplex_contains(SimplexSpec::make(3, 4), win({-2, 2, 6})));
}

TEST_CASE("simplex enumeration") {
    CHECK(enumerate_simplex(SimplexSpec::make(3, 4)).size() == 16);
    CHECK(enumerate_simplex(SimplexSpec::make(2, 3)) ==
          std::vector<Window>{win({0, 3}), win({1, 2}), win({2, 1})});

    for (int n = 2; n <= 5; ++n)
        for (Int p = 2; p <= 7; ++p) {
            if (std::gcd(p, static_cast<Int>(n)) != 1) continue;
            const auto ws = enumerate_simplex(SimplexSpec::make(n, p));
            CHECK(static_cast<Int>(ws.size()) == power(p, n - 1));
            for (const Window& w : ws) CHECK(simplex_contains(SimplexSpec::make(n, p), w));
            CHECK(static_cast<Int>(dominant_inverse_filter(ws).size()) ==
                  binom(p + n, n) / (p + n));
        }
}

TEST_CASE("dominant inverse filter") {
    const auto dom = dominant_inverse_filter(enumerate_simplex(SimplexSpec::make(5, 2)));
    CHECK(std::set<Window>(dom.begin(), dom.end()) ==
          std::set<Window>{win({1, 2, 3, 4, 5}), win({0, 2, 3, 4, 6}), win({2, 0, 3, 6, 4})});
    CHECK(dominant_inverse_filter(enumerate_simplex(SimplexSpec::make(3, 4))).size() == 5);
    CHECK(dominant_inverse_filter({Window::identity(3)}) ==
          std::vector<Window>{Window::identity(3)});
}

TEST_CASE("chamber descriptors") {
    const ChamberDescriptor zero = chamber_descriptor(Window::identity(3), 1);
    CHECK(std::all_of(zero.clamp.begin(), zero.clamp.end(), [](int c) { return c == 0; }));

    const ChamberDescriptor d = chamber_descriptor(win({0, 2, 4}), 1);
    CHECK(d.clamp[static_cast<size_t>(root_index(3, {1, 3}))] == 1);
    CHECK(d.clamp[static_cast<size_t>(root_index(3, {1, 2}))] == 0);
    CHECK(d.clamp[static_cast<size_t>(root_index(3, {2, 3}))] == 0);

    CHECK(descriptor_hash(zero) != descriptor_hash(d));
    CHECK(descriptor_hash(d) == descriptor_hash(chamber_descriptor(win({0, 2, 4}), 1)));
}

TEST_CASE("descriptors separate chambers") {
    // alcoves share a descriptor iff no arrangement hyperplane separates them
    const auto ws = enumerate_simplex(SimplexSpec::make(3, 5));
    for (const Window& x : ws)
        for (const Window& y : ws) {
            const Address kx = address(x), ky = address(y);
            bool separated = false;
            for (PositiveRoot r : positive_roots(3))
                for (int level = 0; level <= 1; ++level) {
                    const bool xs = kx(r) >= level, ys = ky(r) >= level;
                    if (xs != ys) separated = true;
                }
            CHECK((chamber_descriptor(x, 1) == chamber_descriptor(y, 1)) == !separated);
        }
}

TEST_CASE("boundedness of chambers") {
    ChamberDescriptor origin;
    origin.n = 3;
    origin.m = 1;
    origin.clamp.assign(3, 0);
    CHECK(is_bounded_chamber(origin));

    ChamberDescriptor far;
    far.n = 3;
    far.m = 1;
    far.clamp.assign(3, 1);
    CHECK_FALSE(is_bounded_chamber(far));

    for (int m = 1; m <= 2; ++m) {
        const ChamberCensus census = census_chambers(3, m);
        for (const ChamberRecord& r : census.records)
            CHECK(r.bounded == bounded_by_scc(r.descriptor));
    }
    const ChamberCensus census4 = census_chambers(4, 1);
    for (const ChamberRecord& r : census4.records)
        CHECK(r.bounded == bounded_by_scc(r.descriptor));
}

TEST_CASE("chamber census counts and representatives") {
    CHECK(enumerate_chambers(2, 1).size() == 3);
    CHECK(max_alcove_of_bounded(2, 1).size() == 1);

    for (const auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}}) {
        const ChamberCensus census = census_chambers(n, m);
        CHECK(static_cast<Int>(census.records.size()) == power(m * n + 1, n - 1));

        Int bounded = 0;
        std::set<Window> inv_minima, inv_maxima;
        for (const ChamberRecord& r : census.records) {
            inv_minima.insert(invert(r.min_alcove));
            if (r.bounded) {
                ++bounded;
                inv_maxima.insert(invert(r.max_alcove));
            }
        }
        CHECK(bounded == power(m * n - 1, n - 1));

        const auto dplus = enumerate_simplex(SimplexSpec::make(n, m * n + 1));
        CHECK(inv_minima == std::set<Window>(dplus.begin(), dplus.end()));
        const auto dminus = enumerate_simplex(SimplexSpec::make(n, m * n - 1));
        CHECK(inv_maxima == std::set<Window>(dminus.begin(), dminus.end()));
    }
}

TEST_CASE("census alcove counts cover each bounded chamber") {
    // each of the four bounded Shi(3) chambers is a single alcove
    const ChamberCensus census = census_chambers(3, 1);
    std::map<Int, int> by_count;
    for (const ChamberRecord& r : census.records)
        if (r.bounded) ++by_count[r.alcove_count];
    CHECK(by_count == std::map<Int, int>{{1, 4}});

    // bounded alcove totals match the simplex size at level 2 as well
    Int total = 0;
    for (const ChamberRecord& r : census_chambers(3, 2).records)
        if (r.bounded) total += r.alcove_count;
    CHECK(total >= 25); // 25 chambers, each holding at least one alcove
}
