#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "aqt/stats.hpp"
#include "aqt/window.hpp"

namespace aqt {

/// Sommers simplex D^p(n) for p = a*n + b coprime to n, 1 <= b <= n-1:
/// the region containing the origin bounded by H_{alpha,a} for negative
/// roots alpha of height -b and H_{alpha,a+1} for positive roots of height
/// n-b. Congruent to the dilation p * A0, so it holds p^{n-1} alcoves.
struct SimplexSpec {
    int n = 2;
    Int p = 3;
    Int a = 1; // quo(p, n) with remainder in {1,...,n-1}
    int b = 1; // rem

    static SimplexSpec make(int n, Int p); // throws NotCoprime

    friend auto operator<=>(const SimplexSpec&, const SimplexSpec&) = default;
};

/// True iff the alcove of w lies strictly inside the simplex, decided from
/// the address: k(beta) >= -a for positive beta of height b and
/// k(alpha) <= a for positive alpha of height n-b.
bool simplex_contains(const SimplexSpec& s, const Window& w);

/// All alcoves of the simplex, sorted lexicographically by window; exactly
/// p^{n-1} of them.
std::vector<Window> enumerate_simplex(const SimplexSpec& s);

/// Windows whose inverse window is strictly increasing.
std::vector<Window> dominant_inverse_filter(const std::vector<Window>& ws);

/// Canonical key of a level-m extended Shi chamber: the address clamped to
/// [-m, m]. Value m means the alcove is beyond every hyperplane perpendicular
/// to the root, -m below every one, anything between is pinched.
struct ChamberDescriptor {
    int n = 0;
    int m = 1;
    std::vector<int> clamp; // by root index

    friend auto operator<=>(const ChamberDescriptor&, const ChamberDescriptor&) = default;
};

ChamberDescriptor chamber_descriptor(const Window& w, int m);

std::uint64_t descriptor_hash(const ChamberDescriptor& d);

/// True iff the chamber has trivial recession cone, decided by exact
/// rational Fourier-Motzkin elimination on the direction constraints.
bool is_bounded_chamber(const ChamberDescriptor& d);

struct ChamberRecord {
    ChamberDescriptor descriptor;
    Window min_alcove;
    Int min_length = 0;
    bool bounded = false;
    // Filled for bounded chambers: the maximum-length alcove and total count.
    Window max_alcove;
    Int max_length = 0;
    Int alcove_count = 0;
};

struct ChamberCensus {
    int n = 0;
    int m = 1;
    std::vector<ChamberRecord> records; // sorted by min_alcove window
};

/// Full chamber census of the m-extended Shi arrangement: searched over
/// alcoves with addresses in a growing box until the minima and the bounded
/// chambers' alcove sets stabilize; the chamber count must be (mn+1)^{n-1}.
ChamberCensus census_chambers(int n, int m);

/// Each chamber with its unique minimum-length alcove.
std::vector<std::pair<ChamberDescriptor, Window>> enumerate_chambers(int n, int m);

/// The unique maximum-length alcove of every bounded chamber, sorted by
/// window; exactly (mn-1)^{n-1} of them.
std::vector<Window> max_alcove_of_bounded(int n, int m);

} // namespace aqt
