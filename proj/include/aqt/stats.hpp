#pragma once

#include <compare>
#include <vector>

#include "aqt/window.hpp"

namespace aqt {

/// Address of an alcove A: for each positive root alpha the unique integer
/// k(alpha) with k(alpha) < (x, alpha) < k(alpha)+1 on A.
class Address {
public:
    explicit Address(int n) : n_(n), k_(static_cast<size_t>(root_count(n)), 0) {}

    int rank() const { return n_; }
    int operator()(PositiveRoot r) const { return k_[static_cast<size_t>(root_index(n_, r))]; }
    int& at(PositiveRoot r) { return k_[static_cast<size_t>(root_index(n_, r))]; }
    const std::vector<int>& raw() const { return k_; }

    friend auto operator<=>(const Address&, const Address&) = default;

private:
    int n_;
    std::vector<int> k_;
};

/// Shi's criterion: k is the address of an alcove iff
/// k(a)+k(b) <= k(a+b) <= k(a)+k(b)+1 for all summable root triples.
bool is_shi_admissible(const Address& k);

/// Inversion counts by hyperplane height: counts[h] is the number of
/// inversions ((i,j)) with floor((j-i)/n) = h. Trailing zeros are trimmed.
struct InversionPartition {
    std::vector<Int> counts;

    Int total() const;
    friend auto operator<=>(const InversionPartition&, const InversionPartition&) = default;
};

/// Number of inversions ((i,j)) with i < j < n+i (height-0 hyperplanes).
Int shi(const Window& w);

/// Number of inversions whose hyperplane height is at most m-1.
Int shi_m(const Window& w, int m);

/// ish computed from the definition: inversions of the minimal coset
/// representative of the form ((n, j)).
Int ish_def(const Window& w);

/// Closed form: max window value minus n. Agrees with ish_def everywhere.
Int ish_closed(const Window& w);

/// ish of the inverse, computed from the root-lattice part alone:
/// j + n(-r(j)-1) for the largest index j where r(j) is minimal.
Int ish_inv(const Window& w);

InversionPartition inversion_partition(const Window& w);

/// Diagnostic variant binning inversions by floor((w(i)-w(j))/n); it agrees
/// with inversion_partition of the inverse.
InversionPartition inversion_partition_value_gap(const Window& w);

/// Address of the alcove of w, via the inversion/hyperplane dictionary.
Address address(const Window& w);

/// Cross-check: address read off an exact rational interior point of the
/// alcove, using the isometry x -> p(x + r) for w = p + nr.
Address address_geometric(const Window& w);

} // namespace aqt
