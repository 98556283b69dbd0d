#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace aqt {

using Int = long long;

/// Error with a stable machine-readable kind ("BadSum", "RankMismatch", ...).
/// The kind names the violated invariant; the message adds context.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Floor division, b > 0.
constexpr Int floor_div(Int a, Int b) {
    Int q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// Quotient of k by n when the remainder is taken in {1,...,n}.
constexpr Int quo_1n(Int k, Int n) { return floor_div(k - 1, n); }

/// Remainder of k by n in the set {1,...,n}.
constexpr Int rem_1n(Int k, Int n) { return k - n * quo_1n(k, n); }

} // namespace aqt
