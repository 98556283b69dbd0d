#include "aqt/window.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace aqt {

FinitePermutation FinitePermutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return FinitePermutation(std::move(img));
}

FinitePermutation FinitePermutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw Error("BadRank", "permutation needs at least one entry");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
            throw Error("BadPermutation", "images are not a bijection of {1,...,n}");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
    return FinitePermutation(std::move(images));
}

FinitePermutation FinitePermutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= rank(); ++i) inv[static_cast<size_t>(img_[static_cast<size_t>(i) - 1]) - 1] = i;
    return FinitePermutation(std::move(inv));
}

bool FinitePermutation::is_identity() const {
    for (int i = 1; i <= rank(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Window Window::validate(int n, std::vector<Int> values) {
    if (n < 1) throw Error("BadRank", "rank must be positive");
    if (static_cast<int>(values.size()) != n)
        throw Error("BadLength", "expected " + std::to_string(n) + " entries, got " +
                                     std::to_string(values.size()));
    Int sum = 0;
    for (Int v : values) sum += v;
    const Int want = static_cast<Int>(n) * (n + 1) / 2;
    if (sum != want)
        throw Error("BadSum", "window sums to " + std::to_string(sum) + ", expected " +
                                  std::to_string(want));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (Int v : values) {
        const size_t r = static_cast<size_t>(rem_1n(v, n)) - 1;
        if (seen[r]) throw Error("BadResidues", "two entries are congruent mod " + std::to_string(n));
        seen[r] = 1;
    }
    return Window(unchecked_t{}, n, std::move(values));
}

Window Window::identity(int n) {
    std::vector<Int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), Int{1});
    return Window(unchecked_t{}, n, std::move(v));
}

Window Window::lift(const FinitePermutation& w) {
    std::vector<Int> v(w.images().begin(), w.images().end());
    return Window(unchecked_t{}, w.rank(), std::move(v));
}

bool Window::is_identity() const {
    for (int k = 1; k <= n_; ++k)
        if (v_[static_cast<size_t>(k) - 1] != k) return false;
    return true;
}

Window validate_window(int n, std::vector<Int> values) {
    return Window::validate(n, std::move(values));
}

Window compose(const Window& u, const Window& v) {
    if (u.rank() != v.rank())
        throw Error("RankMismatch", "cannot compose windows of ranks " +
                                        std::to_string(u.rank()) + " and " + std::to_string(v.rank()));
    std::vector<Int> out(static_cast<size_t>(u.rank()));
    for (int k = 1; k <= u.rank(); ++k) out[static_cast<size_t>(k) - 1] = u(v(k));
    return Window(Window::unchecked_t{}, u.rank(), std::move(out));
}

Window invert(const Window& w) {
    const int n = w.rank();
    std::vector<Int> out(static_cast<size_t>(n));
    // The value v with v = w(i) mod n has the unique preimage i + (v - w(i)).
    for (int i = 1; i <= n; ++i) {
        const Int wi = w(i);
        const Int v = rem_1n(wi, n);
        out[static_cast<size_t>(v) - 1] = i + (v - wi);
    }
    return Window(Window::unchecked_t{}, n, std::move(out));
}

std::vector<AffineTransposition> inversions(const Window& w) {
    const int n = w.rank();
    std::vector<AffineTransposition> out;
    for (int i = 1; i <= n; ++i) {
        const Int wi = w(i);
        for (int b = 1; b <= n; ++b) {
            if (b == i) continue; // same residue class: values only increase with j
            const Int gap = wi - w(b);
            if (gap <= 0) continue;
            // ((i, b+tn)) is an inversion iff gap > t*n
            const Int tmax = (gap - 1) / n;
            for (Int t = (b > i) ? 0 : 1; t <= tmax; ++t) out.push_back({i, b + t * n});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int length(const Window& w) {
    const int n = w.rank();
    Int total = 0;
    for (int i = 1; i <= n; ++i) {
        const Int wi = w(i);
        for (int b = 1; b <= n; ++b) {
            if (b == i) continue;
            const Int gap = wi - w(b);
            if (gap <= 0) continue;
            const Int t0 = (b > i) ? 0 : 1;
            const Int tmax = (gap - 1) / n;
            if (tmax >= t0) total += tmax - t0 + 1;
        }
    }
    return total;
}

std::pair<FinitePermutation, Window> parabolic_decompose(const Window& w) {
    const int n = w.rank();
    std::vector<Int> sorted = w.values();
    std::sort(sorted.begin(), sorted.end());
    // s(k) = position of w(k) in the increasing rearrangement, so w(k) = u(s(k)).
    std::vector<int> img(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), w(k));
        img[static_cast<size_t>(k) - 1] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return {FinitePermutation::from_images(std::move(img)),
            Window(Window::unchecked_t{}, n, std::move(sorted))};
}

std::pair<FinitePermutation, RootLatticeVector> translation_decompose(const Window& w) {
    const int n = w.rank();
    std::vector<int> img(static_cast<size_t>(n));
    std::vector<Int> r(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const Int v = w(i);
        const Int p = rem_1n(v, n);
        img[static_cast<size_t>(i) - 1] = static_cast<int>(p);
        r[static_cast<size_t>(i) - 1] = (v - p) / n;
    }
    return {FinitePermutation::from_images(std::move(img)), RootLatticeVector{std::move(r)}};
}

std::pair<PositiveRoot, Int> transposition_hyperplane(const AffineTransposition& t, int n) {
    if (t.i < 1 || t.i > n || t.j <= t.i)
        throw Error("BadTransposition", "not a standard representative");
    const int a = static_cast<int>(rem_1n(t.j, n));
    const int b = static_cast<int>(rem_1n(t.i, n));
    const Int level = quo_1n(t.j, n);
    if (a < b) return {PositiveRoot{a, b}, level};
    return {PositiveRoot{b, a}, -level};
}

Window right_multiply_generator(const Window& w, int i) {
    const int n = w.rank();
    if (i < 1 || i > n) throw Error("BadGenerator", "generator index out of range");
    std::vector<Int> v = w.values();
    if (i < n) {
        std::swap(v[static_cast<size_t>(i) - 1], v[static_cast<size_t>(i)]);
    } else {
        const Int first = v.front(), last = v.back();
        v.front() = last - n;
        v.back() = first + n;
    }
    return Window(Window::unchecked_t{}, n, std::move(v));
}

Window parse_window(int n, const std::string& text) {
    std::vector<Int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        Int v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw Error("BadWindowText", "cannot parse entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw Error("BadWindowText", "cannot parse entry '" + item + "'");
        values.push_back(v);
    }
    return Window::validate(n, std::move(values));
}

std::string format_window(const Window& w) {
    std::string out;
    for (size_t i = 0; i < w.values().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.values()[i]);
    }
    return out;
}

} // namespace aqt
