#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aqt/window.hpp"

namespace aqt {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in q with exact integer coefficients,
/// ascending degree, trailing zeros trimmed.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly constant(BigInt v);
    static QPoly monomial(int e, BigInt coeff = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    BigInt coeff(int e) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt operator()(const BigInt& x) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly pow(int e) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    /// Quotient of an exact division; throws InexactDivision when the
    /// remainder is nonzero. The divisor must be monic.
    static QPoly divide_exact(const QPoly& num, const QPoly& div);

    std::string str() const; // "10+5q+q^2"

private:
    void trim();
    std::vector<BigInt> c_;
};

/// q-integer [a] = 1 + q + ... + q^{a-1}.
QPoly q_int(int a);

/// q-factorial [a]! = [a][a-1]...[1].
QPoly q_fact(int a);

/// Gaussian binomial, by the Pascal recurrence (stays in the polynomial ring).
QPoly q_binom(int a, int b);

/// q-Catalan number (1/[n]) * binom_q(2n, n-1).
QPoly q_catalan(int n);

/// q-Fuss-Catalan number (1/[n]) * binom_q((m+1)n, n-1).
QPoly q_fuss_catalan(int n, int m);

/// Negative-side analogue (1/[n]) * binom_q((m+1)n - 2, n-1).
QPoly q_fuss_catalan_neg(int n, int m);

/// Rational q-Catalan number (1/[p+n]) * binom_q(p+n, n), gcd(p, n) = 1.
QPoly q_rational(int n, int p);

/// Sparse bivariate polynomial in q, t with exact integer coefficients.
/// Exponents are non-negative; zero coefficients are never stored.
class QTPoly {
public:
    using Key = std::pair<int, int>; // (q-exponent, t-exponent)

    void add_term(int qe, int te, BigInt c);
    BigInt coeff(int qe, int te) const;

    const std::map<Key, BigInt>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    QTPoly operator+(const QTPoly& o) const;
    bool operator==(const QTPoly& o) const { return t_ == o.t_; }

    BigInt sum_coeffs() const; // evaluation at q = t = 1
    int max_q_exponent() const;
    int max_t_exponent() const;

    std::string str() const;

private:
    std::map<Key, BigInt> t_;
};

/// True iff coeff(a, b) = coeff(b, a) for all exponent pairs.
bool is_qt_symmetric(const QTPoly& p);

/// Sends each term q^a t^b to q^{k+a-b}; requires k >= b - a on every term.
QPoly specialize_antidiagonal(const QTPoly& p, int k);

enum class GenfunSign { positive, negative };

/// Generating function over alcoves A of a Sommers simplex:
///   sum q^{ish_inv(A)} t^{off - shi_m(A)}
/// with off = m*binom(n,2) for the positive family (simplex D^{mn+1}) and
/// off = (mn-2)(n-1)/2 for the negative family (simplex D^{mn-1}).
QTPoly genfun(const std::vector<Window>& ws, int m, GenfunSign sign);

Int genfun_t_offset(int n, int m, GenfunSign sign);

/// Matrix with rows indexed by off - (t-exponent) and columns by the
/// q-exponent, both ascending; at least (offset+1) x (offset+1).
std::vector<std::vector<BigInt>> matrix_view(const QTPoly& p, int t_offset);

} // namespace aqt
