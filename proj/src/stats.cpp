#include "aqt/stats.hpp"

#include <algorithm>

namespace aqt {

bool is_shi_admissible(const Address& k) {
    const int n = k.rank();
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                const int lo = k({a, b}) + k({b, c});
                const int kc = k({a, c});
                if (kc < lo || kc > lo + 1) return false;
            }
    return true;
}

Int InversionPartition::total() const {
    Int sum = 0;
    for (Int c : counts) sum += c;
    return sum;
}

namespace {

// Visits every inversion as (height h, multiplicity 1).
template <typename F>
void for_each_inversion_height(const Window& w, F&& visit) {
    const int n = w.rank();
    for (int i = 1; i <= n; ++i) {
        const Int wi = w(i);
        for (int b = 1; b <= n; ++b) {
            if (b == i) continue;
            const Int gap = wi - w(b);
            if (gap <= 0) continue;
            const Int tmax = (gap - 1) / n;
            // ((i, b+tn)) has height t for b > i and t-1 for b < i.
            for (Int t = (b > i) ? 0 : 1; t <= tmax; ++t) visit((b > i) ? t : t - 1);
        }
    }
}

void trim(std::vector<Int>& counts) {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

} // namespace

Int shi(const Window& w) { return shi_m(w, 1); }

Int shi_m(const Window& w, int m) {
    if (m < 1) throw Error("BadArgs", "m must be >= 1");
    Int total = 0;
    for_each_inversion_height(w, [&](Int h) {
        if (h <= m - 1) ++total;
    });
    return total;
}

Int ish_def(const Window& w) {
    const int n = w.rank();
    const Window u = parabolic_decompose(w).second;
    const Int un = u(n);
    Int total = 0;
    for (int b = 1; b < n; ++b) {
        const Int gap = un - u(b);
        if (gap <= 0) continue;
        const Int tmax = (gap - 1) / n; // inversions ((n, b+tn)) need t >= 1
        total += std::max<Int>(0, tmax);
    }
    return total;
}

Int ish_closed(const Window& w) {
    return *std::max_element(w.values().begin(), w.values().end()) - w.rank();
}

Int ish_inv(const Window& w) {
    const int n = w.rank();
    const RootLatticeVector r = translation_decompose(w).second;
    int j = 1;
    for (int i = 2; i <= n; ++i)
        if (r.r[static_cast<size_t>(i) - 1] <= r.r[static_cast<size_t>(j) - 1]) j = i;
    return j + n * (-r.r[static_cast<size_t>(j) - 1] - 1);
}

InversionPartition inversion_partition(const Window& w) {
    std::vector<Int> counts;
    for_each_inversion_height(w, [&](Int h) {
        if (static_cast<size_t>(h) >= counts.size()) counts.resize(static_cast<size_t>(h) + 1, 0);
        ++counts[static_cast<size_t>(h)];
    });
    trim(counts);
    return {std::move(counts)};
}

InversionPartition inversion_partition_value_gap(const Window& w) {
    const int n = w.rank();
    std::vector<Int> counts;
    for (const AffineTransposition& t : inversions(w)) {
        const Int h = (w(t.i) - w(t.j)) / n; // gap > 0, floor = truncation
        if (static_cast<size_t>(h) >= counts.size()) counts.resize(static_cast<size_t>(h) + 1, 0);
        ++counts[static_cast<size_t>(h)];
    }
    trim(counts);
    return {std::move(counts)};
}

Address address(const Window& w) {
    const int n = w.rank();
    Address k(n);
    // The separating hyperplanes parallel to e_a - e_b are the levels strictly
    // between the alcove and the fundamental alcove; the count carries a sign.
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const Int d = w(a) - w(b);
            k.at({a, b}) = (d < 0) ? static_cast<int>((-d - 1) / n)
                                   : -static_cast<int>((d - 1) / n) - 1;
        }
    return k;
}

Address address_geometric(const Window& w) {
    const int n = w.rank();
    const auto [p, r] = translation_decompose(w);
    // Interior point x_i = (n - i)/n of the fundamental alcove, scaled by n.
    std::vector<Int> pt(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        pt[static_cast<size_t>(p(i)) - 1] = (n - i) + n * r.r[static_cast<size_t>(i) - 1];
    Address k(n);
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            k.at({a, b}) = static_cast<int>(
                floor_div(pt[static_cast<size_t>(a) - 1] - pt[static_cast<size_t>(b) - 1], n));
    return k;
}

} // namespace aqt
