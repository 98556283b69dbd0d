#pragma once

#include <compare>
#include <vector>

#include "aqt/base.hpp"

namespace aqt {

/// Positive root e_a - e_b of type A_{n-1}, with 1 <= a < b <= n.
/// Simple roots are the cases b = a + 1.
struct PositiveRoot {
    int a = 1;
    int b = 2;

    friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

/// Height of a root: number of simple-root summands.
inline int root_height(PositiveRoot r) { return r.b - r.a; }

/// Root-poset order: e_j - e_k <= e_i - e_l iff i <= j < k <= l,
/// i.e. the interval [j, k] is contained in [i, l].
inline bool root_leq(PositiveRoot alpha, PositiveRoot beta) {
    return beta.a <= alpha.a && alpha.b <= beta.b;
}

inline int root_count(int n) { return n * (n - 1) / 2; }

/// Index of e_a - e_b in lexicographic (a, b) order; inverse of root_at.
inline int root_index(int n, PositiveRoot r) {
    return (r.a - 1) * (2 * n - r.a) / 2 + (r.b - r.a - 1);
}

inline PositiveRoot root_at(int n, int index) {
    int a = 1;
    while (index >= n - a) {
        index -= n - a;
        ++a;
    }
    return {a, a + 1 + index};
}

inline std::vector<PositiveRoot> positive_roots(int n) {
    std::vector<PositiveRoot> out;
    out.reserve(root_count(n));
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
    return out;
}

} // namespace aqt
