#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "aqt/base.hpp"
#include "aqt/roots.hpp"

namespace aqt {

/// Permutation of {1,...,n}; all indices and images are 1-based.
class FinitePermutation {
public:
    static FinitePermutation identity(int n);

    /// Validates that images is a bijection of {1,...,n}.
    static FinitePermutation from_images(std::vector<int> images);

    int rank() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    FinitePermutation inverse() const;
    bool is_identity() const;

    friend auto operator<=>(const FinitePermutation&, const FinitePermutation&) = default;

private:
    explicit FinitePermutation(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_;
};

/// Affine permutation of rank n in window notation: the values
/// [w(1),...,w(n)] of a bijection w: Z -> Z with w(k+n) = w(k)+n for all k
/// and w(1)+...+w(n) = n(n+1)/2. Windows are immutable values; equality is
/// componentwise.
class Window {
public:
    Window() = default; // empty rank-0 placeholder

    /// Checks length, the window sum, and pairwise incongruence mod n.
    static Window validate(int n, std::vector<Int> values);

    static Window identity(int n);

    /// Embeds a finite permutation as the window [w(1),...,w(n)].
    static Window lift(const FinitePermutation& w);

    int rank() const { return n_; }
    const std::vector<Int>& values() const { return v_; }

    /// w(k) for any integer k, via the periodic extension.
    Int operator()(Int k) const {
        const Int q = quo_1n(k, n_);
        return v_[static_cast<size_t>(k - n_ * q) - 1] + n_ * q;
    }

    bool is_identity() const;

    friend auto operator<=>(const Window&, const Window&) = default;

    // Trusted construction for values already known to satisfy the invariants.
    struct unchecked_t {};
    Window(unchecked_t, int n, std::vector<Int> v) : n_(n), v_(std::move(v)) {}

private:
    int n_ = 0;
    std::vector<Int> v_;
};

/// Affine transposition ((i,j)): the periodic swap of positions i+kn and
/// j+kn. Standard representative has 1 <= i <= n and i < j.
struct AffineTransposition {
    Int i = 0;
    Int j = 0;

    friend auto operator<=>(const AffineTransposition&, const AffineTransposition&) = default;
};

/// Element of the root lattice Q: an integer vector with components summing to 0.
struct RootLatticeVector {
    std::vector<Int> r;

    friend auto operator<=>(const RootLatticeVector&, const RootLatticeVector&) = default;
};

Window validate_window(int n, std::vector<Int> values);

inline Int apply(const Window& w, Int k) { return w(k); }

/// Group product: the window of k -> u(v(k)). Requires equal rank.
Window compose(const Window& u, const Window& v);

/// The window of the inverse bijection; compose(w, invert(w)) is the identity.
Window invert(const Window& w);

/// All affine inversions of w: standard representatives ((i,j)) with
/// w(i) > w(j). The count equals the Coxeter length of w.
std::vector<AffineTransposition> inversions(const Window& w);

Int length(const Window& w);

/// Decomposition w = u . s where s is the finite sorter, u the minimal coset
/// representative: returns (s, u) with sorted window u and w(k) = u(s(k)).
std::pair<FinitePermutation, Window> parabolic_decompose(const Window& w);

/// Decomposition values[i] = p(i) + n*r(i) with p a permutation of {1,...,n}
/// and r in the root lattice.
std::pair<FinitePermutation, RootLatticeVector> translation_decompose(const Window& w);

/// Hyperplane e_{rem(j,n)} - e_{rem(i,n)} = quo(j,n) of a transposition,
/// normalized so the root is positive (root and level flip sign together).
std::pair<PositiveRoot, Int> transposition_hyperplane(const AffineTransposition& t, int n);

/// Right multiplication by the generator s_i, 1 <= i <= n: the neighbor
/// alcove across the i-th wall of w's alcove.
Window right_multiply_generator(const Window& w, int i);

/// Parses the comma-separated text form, e.g. "1,5,0"; negative entries allowed.
Window parse_window(int n, const std::string& text);

std::string format_window(const Window& w);

} // namespace aqt
