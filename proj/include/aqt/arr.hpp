#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "aqt/qt.hpp"

namespace aqt {

/// Integer hyperplane e_i - e_j = level in n coordinates, 1 <= i < j <= n.
struct Hyperplane {
    int i = 1;
    int j = 2;
    Int level = 0;

    friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

struct Arrangement {
    int n = 0;
    std::string name;
    std::vector<Hyperplane> hyperplanes;
};

/// Families: "cox" (level 0), "shi" (levels 0,1), "shi_m" (levels -m+1..m),
/// "ish" (Coxeter plus e_i - e_n = 1..n-i). Throws UnknownFamily otherwise.
Arrangement build_arrangement(const std::string& family, int n, int m = 1);

/// Number of points of F_p^n lying on no hyperplane (brute force, exact).
Int complement_count(const Arrangement& arr, Int p, Int budget = 0);

inline constexpr Int kDefaultCharpolyBudget = 400'000'000;

/// Ambient characteristic polynomial: complement counts at n+2 primes larger
/// than max|level| + n, interpolated to the degree-n integer polynomial and
/// verified on the extra prime. A fixed prime list can be supplied instead;
/// inconsistency raises InsufficientPrimes.
QPoly charpoly_ff(const Arrangement& arr, Int budget = kDefaultCharpolyBudget,
                  std::vector<Int> primes = {});

/// Primes the default charpoly computation would use.
std::vector<Int> charpoly_primes(const Arrangement& arr, int count);

/// Complement count of the Ish arrangement over F_p by the cyclic placement
/// argument: p ways to place the last label on a p-gon, then p-n for each of
/// the others. Equals the brute-force count for every prime p > n.
Int ish_cyclic_count(int n, Int p);

/// Zaslavsky: chambers = (-1)^n chi(-1); bounded chambers, counted in the
/// essential quotient where the common lineality is factored out, equal
/// (-1)^{n-1} chi(1).
std::pair<Int, Int> zaslavsky_counts(const QPoly& chi, int n);

} // namespace aqt
