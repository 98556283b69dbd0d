#include "aqt/paths.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace aqt {

RootIdeal RootIdeal::from_members(int n, const std::vector<PositiveRoot>& members) {
    RootIdeal ideal(n);
    for (PositiveRoot r : members) {
        if (r.a < 1 || r.b <= r.a || r.b > n) throw Error("BadRoot", "not a positive root");
        ideal.in_[static_cast<size_t>(root_index(n, r))] = 1;
    }
    for (PositiveRoot r : members) {
        PositiveRoot up = r.b < n ? PositiveRoot{r.a, r.b + 1} : PositiveRoot{};
        if (r.b < n && !ideal.contains(up)) throw Error("NotAnIdeal", "missing upward cover");
        if (r.a > 1 && !ideal.contains({r.a - 1, r.b})) throw Error("NotAnIdeal", "missing upward cover");
    }
    return ideal;
}

RootIdeal RootIdeal::full(int n) {
    RootIdeal ideal(n);
    std::fill(ideal.in_.begin(), ideal.in_.end(), 1);
    return ideal;
}

std::vector<PositiveRoot> RootIdeal::members() const {
    std::vector<PositiveRoot> out;
    for (PositiveRoot r : positive_roots(n_))
        if (contains(r)) out.push_back(r);
    return out;
}

int RootIdeal::size() const {
    int c = 0;
    for (char b : in_) c += b;
    return c;
}

int RootIdeal::column_min(int i) const {
    for (int j = i + 1; j <= n_; ++j)
        if (contains({i, j})) return j;
    return n_ + 1;
}

RootIdeal ideal_from_minimal_roots(int n, const std::vector<PositiveRoot>& gens) {
    for (size_t x = 0; x < gens.size(); ++x)
        for (size_t y = x + 1; y < gens.size(); ++y)
            if (root_leq(gens[x], gens[y]) || root_leq(gens[y], gens[x]))
                throw Error("ComparableGenerators", "generators must be pairwise incomparable");
    RootIdeal ideal(n);
    for (PositiveRoot g : gens) {
        if (g.a < 1 || g.b <= g.a || g.b > n) throw Error("BadRoot", "not a positive root");
        for (int a = 1; a <= g.a; ++a)
            for (int b = g.b; b <= n; ++b) ideal.in_[static_cast<size_t>(root_index(n, {a, b}))] = 1;
    }
    return ideal;
}

std::vector<PositiveRoot> valleys(const RootIdeal& ideal) {
    const int n = ideal.rank();
    std::vector<PositiveRoot> out;
    for (PositiveRoot r : positive_roots(n)) {
        if (!ideal.contains(r)) continue;
        // minimal iff neither lower cover lies in the ideal
        if (r.a + 1 < r.b && ideal.contains({r.a + 1, r.b})) continue;
        if (r.b - 1 > r.a && ideal.contains({r.a, r.b - 1})) continue;
        out.push_back(r);
    }
    return out;
}

Int bounce(const RootIdeal& ideal) {
    const int n = ideal.rank();
    // Column i of the path runs at height column_min(i) - 1 (n for empty columns).
    std::vector<int> h(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) h[static_cast<size_t>(i) - 1] = ideal.column_min(i) - 1;
    Int total = 0;
    int b = n;
    while (b > 0) {
        int next = 0;
        for (int i = 1; i <= n; ++i)
            if (h[static_cast<size_t>(i) - 1] < b) ++next;
        if (next == 0) break;
        total += next;
        b = next;
    }
    return total;
}

Address sommers_address(const RootIdeal& ideal) {
    const int n = ideal.rank();
    // chain[a][b] = longest decomposition of e_a - e_b into ideal roots (0 if none)
    std::vector<std::vector<int>> chain(static_cast<size_t>(n) + 1,
                                        std::vector<int>(static_cast<size_t>(n) + 1, 0));
    for (int len = 1; len < n; ++len)
        for (int a = 1; a + len <= n; ++a) {
            const int b = a + len;
            int best = ideal.contains({a, b}) ? 1 : 0;
            for (int c = a + 1; c < b; ++c)
                if (ideal.contains({a, c}) && chain[static_cast<size_t>(c)][static_cast<size_t>(b)] > 0)
                    best = std::max(best, 1 + chain[static_cast<size_t>(c)][static_cast<size_t>(b)]);
            chain[static_cast<size_t>(a)][static_cast<size_t>(b)] = best;
        }
    Address k(n);
    for (PositiveRoot r : positive_roots(n))
        k.at(r) = chain[static_cast<size_t>(r.a)][static_cast<size_t>(r.b)];
    return k;
}

std::vector<RootIdeal> all_ideals(int n) {
    // Ideals correspond to weakly increasing column minima j_i >= i+1 (n+1 = empty).
    std::vector<RootIdeal> out;
    std::vector<int> jmin(static_cast<size_t>(n), n + 1); // column n is always empty
    auto emit = [&] {
        RootIdeal ideal(n);
        std::vector<PositiveRoot> members;
        for (int i = 1; i < n; ++i)
            for (int j = jmin[static_cast<size_t>(i) - 1]; j <= n; ++j) members.push_back({i, j});
        out.push_back(RootIdeal::from_members(n, members));
    };
    auto rec = [&](auto&& self, int col, int lower) -> void {
        if (col == n) {
            emit();
            return;
        }
        for (int j = std::max(col + 1, lower); j <= n + 1; ++j) {
            jmin[static_cast<size_t>(col) - 1] = j;
            self(self, col + 1, j);
        }
    };
    if (n == 1) {
        out.push_back(RootIdeal(1));
        return out;
    }
    rec(rec, 1, 2);
    return out;
}

bool labeled_path_valid(const LabeledPath& p) {
    if (p.w.rank() != p.ideal.rank()) return false;
    for (PositiveRoot v : valleys(p.ideal))
        if (p.w(v.a) > p.w(v.b)) return false;
    return true;
}

Int area_prime(const LabeledPath& p) {
    if (!labeled_path_valid(p)) throw Error("InvalidLabeledPath", "a valley is an inversion of w");
    const int n = p.ideal.rank();
    Int count = 0;
    for (PositiveRoot r : positive_roots(n))
        if (p.w(r.a) < p.w(r.b) && !p.ideal.contains(r)) ++count;
    return count;
}

namespace {

// Unique positive alcove whose address is target (Sommers); found by search
// over the alcoves with componentwise address between 0 and target.
Window positive_alcove_with_address(const Address& target) {
    const int n = target.rank();
    const auto roots = positive_roots(n);
    auto in_box = [&](const Window& w, Address& addr) {
        addr = address(w);
        for (PositiveRoot r : roots) {
            const int k = addr(r);
            if (k < 0 || k > target(r)) return false;
        }
        return true;
    };

    const Window id = Window::identity(n);
    std::set<Window> seen{id};
    std::queue<Window> frontier;
    frontier.push(id);
    Address addr(n);
    if (in_box(id, addr) && addr == target) return id;
    while (!frontier.empty()) {
        const Window w = frontier.front();
        frontier.pop();
        for (int i = 1; i <= n; ++i) {
            Window nb = right_multiply_generator(w, i);
            if (seen.count(nb)) continue;
            if (!in_box(nb, addr)) continue;
            if (addr == target) return nb;
            seen.insert(nb);
            frontier.push(std::move(nb));
        }
    }
    throw Error("NoSuchAlcove", "no positive alcove realizes the address");
}

} // namespace

Window from_labeled_path(const LabeledPath& p) {
    if (p.w.rank() != p.ideal.rank()) throw Error("RankMismatch", "label and ideal rank differ");
    for (PositiveRoot v : valleys(p.ideal))
        if (p.w(v.a) > p.w(v.b))
            throw Error("ValleyViolation", "valley (" + std::to_string(v.a) + "," +
                                               std::to_string(v.b) + ") is an inversion of w");
    const Window positive = positive_alcove_with_address(sommers_address(p.ideal));
    return compose(positive, Window::lift(p.w));
}

LabeledPath to_labeled_path(const Window& w) {
    const int n = w.rank();
    const auto [sorter, rep] = parabolic_decompose(w);
    const Address addr = address(rep);
    std::vector<PositiveRoot> members;
    for (PositiveRoot r : positive_roots(n))
        if (addr(r) >= 1) members.push_back(r);
    LabeledPath p{sorter, RootIdeal::from_members(n, members)};
    if (!labeled_path_valid(p) || from_labeled_path(p) != w)
        throw Error("NotRepresentingAlcove",
                    format_window(w) + " is not the minimal alcove of its Shi chamber");
    return p;
}

std::string render_labeled_path(const LabeledPath& p) {
    const int n = p.ideal.rank();
    std::string out;
    for (int j = n; j >= 2; --j) {
        std::string row;
        bool bar_done = false;
        for (int i = 1; i < j; ++i) {
            if (!bar_done && !p.ideal.contains({i, j})) {
                row += row.empty() ? "|" : " |";
                bar_done = true;
            }
            if (!row.empty()) row += ' ';
            row += (p.w(i) > p.w(j)) ? "×" : "o";
        }
        if (!bar_done) row += row.empty() ? "|" : " |";
        out += row;
        out += '\n';
    }
    return out;
}

} // namespace aqt
