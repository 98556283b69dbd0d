#include "aqt/arr.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "aqt/parallel.hpp"

namespace aqt {

Arrangement build_arrangement(const std::string& family, int n, int m) {
    if (n < 2) throw Error("BadRank", "rank must be at least 2");
    if (m < 1) throw Error("BadArgs", "m must be >= 1");
    Arrangement arr;
    arr.n = n;
    arr.name = family;
    auto add_levels = [&](Int lo, Int hi) {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (Int a = lo; a <= hi; ++a) arr.hyperplanes.push_back({i, j, a});
    };
    if (family == "cox") {
        add_levels(0, 0);
    } else if (family == "shi") {
        add_levels(0, 1);
    } else if (family == "shi_m") {
        add_levels(-m + 1, m);
    } else if (family == "ish") {
        add_levels(0, 0);
        for (int i = 1; i < n; ++i)
            for (Int a = 1; a <= n - i; ++a) arr.hyperplanes.push_back({i, n, a});
    } else {
        throw Error("UnknownFamily", "no arrangement family named '" + family + "'");
    }
    std::sort(arr.hyperplanes.begin(), arr.hyperplanes.end());
    return arr;
}

Int complement_count(const Arrangement& arr, Int p, Int budget) {
    const int n = arr.n;
    Int points = 1;
    for (int i = 0; i < n; ++i) points *= p;
    if (budget > 0 && points * static_cast<Int>(arr.hyperplanes.size()) > budget)
        throw Error("BudgetExceeded", "point count " + std::to_string(points) + " x " +
                                          std::to_string(arr.hyperplanes.size()) +
                                          " hyperplanes exceeds the budget");
    // reduced levels
    std::vector<std::array<Int, 3>> planes;
    planes.reserve(arr.hyperplanes.size());
    for (const Hyperplane& h : arr.hyperplanes)
        planes.push_back({static_cast<Int>(h.i - 1), static_cast<Int>(h.j - 1),
                          ((h.level % p) + p) % p});

    Int inner = points / p; // points per value of the first coordinate
    return parallel_map_reduce<Int>(
        static_cast<size_t>(p),
        [&](size_t lo, size_t hi) {
            Int count = 0;
            std::vector<Int> v(static_cast<size_t>(n), 0);
            for (size_t first = lo; first < hi; ++first) {
                v[0] = static_cast<Int>(first);
                std::fill(v.begin() + 1, v.end(), 0);
                for (Int step = 0; step < inner; ++step) {
                    bool off = true;
                    for (const auto& pl : planes) {
                        Int d = v[static_cast<size_t>(pl[0])] - v[static_cast<size_t>(pl[1])] - pl[2];
                        d %= p;
                        if (d == 0) {
                            off = false;
                            break;
                        }
                    }
                    if (off) ++count;
                    // odometer over coordinates 1..n-1
                    for (int i = 1; i < n; ++i) {
                        if (++v[static_cast<size_t>(i)] < p) break;
                        v[static_cast<size_t>(i)] = 0;
                    }
                }
            }
            return count;
        },
        [](Int& acc, Int part) { acc += part; });
}

std::vector<Int> charpoly_primes(const Arrangement& arr, int count) {
    Int max_level = 0;
    for (const Hyperplane& h : arr.hyperplanes)
        max_level = std::max(max_level, h.level < 0 ? -h.level : h.level);
    const Int floor_at = max_level + arr.n; // keeps every reduced hyperplane distinct
    auto is_prime = [](Int x) {
        if (x < 2) return false;
        for (Int d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    std::vector<Int> primes;
    for (Int p = floor_at + 1; static_cast<int>(primes.size()) < count; ++p)
        if (is_prime(p)) primes.push_back(p);
    return primes;
}

namespace {

struct Frac {
    BigInt num = 0, den = 1;

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    Frac operator+(const Frac& o) const {
        Frac r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator*(const Frac& o) const {
        Frac r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
};

} // namespace

QPoly charpoly_ff(const Arrangement& arr, Int budget, std::vector<Int> primes) {
    const int n = arr.n;
    if (primes.empty()) primes = charpoly_primes(arr, n + 2);
    if (static_cast<int>(primes.size()) < n + 1)
        throw Error("InsufficientPrimes", "need at least n+1 primes to interpolate");

    std::vector<Int> counts;
    counts.reserve(primes.size());
    for (Int p : primes) counts.push_back(complement_count(arr, p, budget));

    // Lagrange interpolation of the degree-n polynomial through the first
    // n+1 points, with exact rational arithmetic.
    std::vector<Frac> coeffs(static_cast<size_t>(n) + 1, Frac{0, 1});
    for (int i = 0; i <= n; ++i) {
        // basis polynomial prod_{j != i} (x - p_j) / (p_i - p_j)
        std::vector<BigInt> basis{1};
        BigInt denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<BigInt> next(basis.size() + 1, 0);
            for (size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * primes[static_cast<size_t>(j)];
            }
            basis = std::move(next);
            denom *= BigInt(primes[static_cast<size_t>(i)]) - primes[static_cast<size_t>(j)];
        }
        for (size_t d = 0; d < basis.size(); ++d) {
            Frac term{basis[d] * counts[static_cast<size_t>(i)], denom};
            term.reduce();
            coeffs[d] = coeffs[d] + term;
        }
    }

    std::vector<BigInt> integral(coeffs.size());
    for (size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d].den != 1)
            throw Error("InsufficientPrimes", "interpolation produced a non-integer coefficient");
        integral[d] = coeffs[d].num;
    }
    QPoly chi{std::move(integral)};

    // every extra prime must land on the same polynomial
    for (size_t i = static_cast<size_t>(n) + 1; i < primes.size(); ++i)
        if (chi(BigInt(primes[i])) != counts[i])
            throw Error("InsufficientPrimes",
                        "interpolated polynomial disagrees with the count at p = " +
                            std::to_string(primes[i]));
    return chi;
}

Int ish_cyclic_count(int n, Int p) {
    if (p <= n) throw Error("BadArgs", "need p > n");
    Int count = p; // place the last label anywhere on the p-gon
    for (int i = 1; i < n; ++i) count *= p - n;
    return count;
}

std::pair<Int, Int> zaslavsky_counts(const QPoly& chi, int n) {
    const BigInt at_minus1 = chi(BigInt(-1));
    const BigInt at_1 = chi(BigInt(1));
    BigInt chambers = (n % 2 == 0) ? at_minus1 : -at_minus1;
    BigInt bounded = (n % 2 == 1) ? at_1 : -at_1;
    return {chambers.convert_to<Int>(), bounded.convert_to<Int>()};
}

} // namespace aqt
