#include "aqt/qt.hpp"

#include <algorithm>

#include "aqt/parallel.hpp"
#include "aqt/stats.hpp"

namespace aqt {

QPoly QPoly::constant(BigInt v) {
    if (v == 0) return QPoly();
    return QPoly({std::move(v)});
}

QPoly QPoly::monomial(int e, BigInt coeff) {
    if (coeff == 0) return QPoly();
    std::vector<BigInt> c(static_cast<size_t>(e) + 1);
    c.back() = std::move(coeff);
    return QPoly(std::move(c));
}

BigInt QPoly::coeff(int e) const {
    if (e < 0 || static_cast<size_t>(e) >= c_.size()) return 0;
    return c_[static_cast<size_t>(e)];
}

BigInt QPoly::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] -= o.c_[i];
    }
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::pow(int e) const {
    QPoly acc = QPoly::constant(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

QPoly QPoly::divide_exact(const QPoly& num, const QPoly& div) {
    if (div.is_zero()) throw Error("InexactDivision", "division by zero polynomial");
    if (div.c_.back() != 1) throw Error("InexactDivision", "divisor is not monic");
    std::vector<BigInt> rem = num.c_;
    const int dd = div.degree();
    if (num.degree() < dd) {
        if (!num.is_zero()) throw Error("InexactDivision", "nonzero remainder");
        return QPoly();
    }
    std::vector<BigInt> quot(static_cast<size_t>(num.degree() - dd) + 1);
    for (int e = num.degree() - dd; e >= 0; --e) {
        const BigInt c = rem[static_cast<size_t>(e + dd)];
        quot[static_cast<size_t>(e)] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(e + i)] -= c * div.coeff(i);
    }
    for (const BigInt& c : rem)
        if (c != 0) throw Error("InexactDivision", "nonzero remainder");
    return QPoly(std::move(quot));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = 0; e <= degree(); ++e) {
        const BigInt& c = c_[static_cast<size_t>(e)];
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        const bool unit = (mag == 1) && e > 0;
        if (!unit) out += mag.str();
        if (e == 1)
            out += 'q';
        else if (e > 1)
            out += "q^" + std::to_string(e);
    }
    return out;
}

QPoly q_int(int a) {
    if (a < 0) throw Error("BadArgs", "q_int needs a >= 0");
    return QPoly(std::vector<BigInt>(static_cast<size_t>(a), 1));
}

QPoly q_fact(int a) {
    if (a < 0) throw Error("BadArgs", "q_fact needs a >= 0");
    QPoly acc = QPoly::constant(1);
    for (int i = 2; i <= a; ++i) acc = acc * q_int(i);
    return acc;
}

QPoly q_binom(int a, int b) {
    if (b < 0 || b > a) throw Error("BadArgs", "q_binom needs 0 <= b <= a");
    // Pascal: binom(a, b) = binom(a-1, b-1) + q^b * binom(a-1, b)
    std::vector<QPoly> row(static_cast<size_t>(b) + 1);
    row[0] = QPoly::constant(1);
    for (int i = 1; i <= a; ++i)
        for (int j = std::min(i, b); j >= 1; --j) {
            QPoly next = row[static_cast<size_t>(j) - 1];
            if (j < i) next = next + QPoly::monomial(j) * row[static_cast<size_t>(j)];
            row[static_cast<size_t>(j)] = std::move(next);
        }
    return row[static_cast<size_t>(b)];
}

QPoly q_catalan(int n) {
    if (n < 1) throw Error("BadArgs", "q_catalan needs n >= 1");
    return QPoly::divide_exact(q_binom(2 * n, n - 1), q_int(n));
}

QPoly q_fuss_catalan(int n, int m) {
    if (n < 1 || m < 1) throw Error("BadArgs", "q_fuss_catalan needs n, m >= 1");
    return QPoly::divide_exact(q_binom((m + 1) * n, n - 1), q_int(n));
}

QPoly q_fuss_catalan_neg(int n, int m) {
    if (n < 1 || m < 1) throw Error("BadArgs", "needs n, m >= 1");
    return QPoly::divide_exact(q_binom((m + 1) * n - 2, n - 1), q_int(n));
}

QPoly q_rational(int n, int p) {
    if (n < 1 || p < 1) throw Error("BadArgs", "q_rational needs n, p >= 1");
    return QPoly::divide_exact(q_binom(p + n, n), q_int(p + n));
}

void QTPoly::add_term(int qe, int te, BigInt c) {
    if (qe < 0 || te < 0) throw Error("NegativeExponent", "exponents must be non-negative");
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace({qe, te}, std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

BigInt QTPoly::coeff(int qe, int te) const {
    const auto it = t_.find({qe, te});
    return it == t_.end() ? BigInt(0) : it->second;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
    QTPoly out = *this;
    for (const auto& [k, c] : o.t_) out.add_term(k.first, k.second, c);
    return out;
}

BigInt QTPoly::sum_coeffs() const {
    BigInt total = 0;
    for (const auto& [k, c] : t_) total += c;
    return total;
}

int QTPoly::max_q_exponent() const {
    int m = 0;
    for (const auto& [k, c] : t_) m = std::max(m, k.first);
    return m;
}

int QTPoly::max_t_exponent() const {
    int m = 0;
    for (const auto& [k, c] : t_) m = std::max(m, k.second);
    return m;
}

std::string QTPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        const bool has_var = k.first > 0 || k.second > 0;
        if (mag != 1 || !has_var) out += mag.str();
        if (k.first == 1)
            out += 'q';
        else if (k.first > 1)
            out += "q^" + std::to_string(k.first);
        if (k.second == 1)
            out += 't';
        else if (k.second > 1)
            out += "t^" + std::to_string(k.second);
    }
    return out;
}

bool is_qt_symmetric(const QTPoly& p) {
    for (const auto& [k, c] : p.terms())
        if (p.coeff(k.second, k.first) != c) return false;
    return true;
}

QPoly specialize_antidiagonal(const QTPoly& p, int k) {
    std::vector<BigInt> coeffs;
    for (const auto& [key, c] : p.terms()) {
        const int e = k + key.first - key.second;
        if (e < 0) throw Error("NegativeExponent", "offset too small for term");
        if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<size_t>(e) + 1);
        coeffs[static_cast<size_t>(e)] += c;
    }
    return QPoly(std::move(coeffs));
}

Int genfun_t_offset(int n, int m, GenfunSign sign) {
    return sign == GenfunSign::positive ? static_cast<Int>(m) * root_count(n)
                                        : static_cast<Int>(m * n - 2) * (n - 1) / 2;
}

QTPoly genfun(const std::vector<Window>& ws, int m, GenfunSign sign) {
    if (ws.empty()) throw Error("BadArgs", "genfun needs at least one window");
    const int n = ws.front().rank();
    const Int off = genfun_t_offset(n, m, sign);
    return parallel_map_reduce<QTPoly>(
        ws.size(),
        [&](size_t lo, size_t hi) {
            QTPoly part;
            for (size_t i = lo; i < hi; ++i) {
                const Int qe = ish_inv(ws[i]);
                const Int te = off - shi_m(ws[i], m);
                if (qe < 0 || te < 0)
                    throw Error("NegativeExponent",
                                "window " + format_window(ws[i]) + " does not fit the offset");
                part.add_term(static_cast<int>(qe), static_cast<int>(te), 1);
            }
            return part;
        },
        [](QTPoly& acc, QTPoly part) { acc = acc + part; });
}

std::vector<std::vector<BigInt>> matrix_view(const QTPoly& p, int t_offset) {
    if (p.max_t_exponent() > t_offset)
        throw Error("NegativeExponent", "t-offset smaller than a t-exponent");
    const int rows = t_offset + 1;
    const int cols = std::max(t_offset, p.max_q_exponent()) + 1;
    std::vector<std::vector<BigInt>> out(static_cast<size_t>(rows),
                                         std::vector<BigInt>(static_cast<size_t>(cols)));
    for (const auto& [k, c] : p.terms())
        out[static_cast<size_t>(t_offset - k.second)][static_cast<size_t>(k.first)] = c;
    return out;
}

} // namespace aqt
