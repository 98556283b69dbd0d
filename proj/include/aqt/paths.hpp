#pragma once

#include <compare>
#include <string>
#include <vector>

#include "aqt/stats.hpp"
#include "aqt/window.hpp"

namespace aqt {

/// Upward-closed set of positive roots (an order ideal of the root poset,
/// equivalently a Dyck path: the ideal cells sit up-left of the path).
class RootIdeal {
public:
    explicit RootIdeal(int n) : n_(n), in_(static_cast<size_t>(root_count(n)), 0) {}

    /// Validates upward closure.
    static RootIdeal from_members(int n, const std::vector<PositiveRoot>& members);

    static RootIdeal full(int n);

    int rank() const { return n_; }
    bool contains(PositiveRoot r) const { return in_[static_cast<size_t>(root_index(n_, r))] != 0; }
    std::vector<PositiveRoot> members() const; // sorted lexicographically
    int size() const;

    /// Smallest j with e_i - e_j in the ideal, or n+1 when column i is empty.
    int column_min(int i) const;

    friend auto operator<=>(const RootIdeal&, const RootIdeal&) = default;

    friend RootIdeal ideal_from_minimal_roots(int n, const std::vector<PositiveRoot>& gens);

private:
    int n_;
    std::vector<char> in_;
};

/// Upward closure of a pairwise-incomparable generating set; the generators
/// come back as the valleys of the result.
RootIdeal ideal_from_minimal_roots(int n, const std::vector<PositiveRoot>& gens);

/// Minimal members of the ideal (the floors of the chamber; the cells in the
/// valleys of the Dyck path).
std::vector<PositiveRoot> valleys(const RootIdeal& ideal);

/// Haglund's bounce statistic of the Dyck path of the ideal: starting from
/// (n,n), travel left to the path and down to the diagonal, repeatedly; sum
/// the diagonal indices 1..n-1 that the bounce path touches.
Int bounce(const RootIdeal& ideal);

/// Sommers' address of the minimal alcove of the positive Shi chamber of the
/// ideal: k(alpha) is the largest r such that alpha is a sum of r ideal roots.
Address sommers_address(const RootIdeal& ideal);

/// All ideals of the rank-n root poset (Catalan(n) of them).
std::vector<RootIdeal> all_ideals(int n);

/// A Dyck path labeled by a finite permutation. Valid when every valley of
/// the ideal is a non-inversion of w.
struct LabeledPath {
    FinitePermutation w;
    RootIdeal ideal;

    friend auto operator<=>(const LabeledPath&, const LabeledPath&) = default;
};

bool labeled_path_valid(const LabeledPath& p);

/// Number of non-inversions of w below the path: pairs i < j with
/// w(i) < w(j) and e_i - e_j outside the ideal.
Int area_prime(const LabeledPath& p);

/// Labeled path of a representing alcove: (sorter, ideal of the minimal
/// coset representative). Fails with NotRepresentingAlcove when the
/// round-trip through from_labeled_path does not return w.
LabeledPath to_labeled_path(const Window& w);

/// Representing alcove of a labeled path: the positive alcove realizing
/// sommers_address(ideal), composed with the lift of w.
Window from_labeled_path(const LabeledPath& p);

/// Rows top-to-bottom; '×' marks inversions of w, 'o' non-inversions, '|'
/// the path crossing between the ideal cells and the rest of each row.
std::string render_labeled_path(const LabeledPath& p);

} // namespace aqt
