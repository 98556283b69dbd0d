#include "aqt/regions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace aqt {

SimplexSpec SimplexSpec::make(int n, Int p) {
    if (n < 2) throw Error("BadRank", "rank must be at least 2");
    if (p < 1) throw Error("BadArgs", "p must be positive");
    if (std::gcd(p, static_cast<Int>(n)) != 1)
        throw Error("NotCoprime", std::to_string(p) + " shares a factor with " + std::to_string(n));
    SimplexSpec s;
    s.n = n;
    s.p = p;
    s.a = quo_1n(p, n);
    s.b = static_cast<int>(rem_1n(p, n));
    // b = n is impossible: p coprime to n forces rem in {1,...,n-1}
    return s;
}

bool simplex_contains(const SimplexSpec& s, const Window& w) {
    if (w.rank() != s.n) throw Error("RankMismatch", "window rank differs from simplex rank");
    const Address k = address(w);
    for (PositiveRoot r : positive_roots(s.n)) {
        const int h = root_height(r);
        if (h == s.b && k(r) < -s.a) return false;
        if (h == s.n - s.b && k(r) > s.a) return false;
    }
    return true;
}

std::vector<Window> enumerate_simplex(const SimplexSpec& s) {
    const Window id = Window::identity(s.n);
    std::set<Window> seen{id};
    std::queue<Window> frontier;
    frontier.push(id);
    while (!frontier.empty()) {
        const Window w = frontier.front();
        frontier.pop();
        for (int i = 1; i <= s.n; ++i) {
            Window nb = right_multiply_generator(w, i);
            if (seen.count(nb) || !simplex_contains(s, nb)) continue;
            seen.insert(nb);
            frontier.push(std::move(nb));
        }
    }
    Int expected = 1;
    for (int i = 1; i < s.n; ++i) expected *= s.p;
    if (static_cast<Int>(seen.size()) != expected)
        throw Error("CountMismatch", "simplex search found " + std::to_string(seen.size()) +
                                         " alcoves, expected " + std::to_string(expected));
    return {seen.begin(), seen.end()};
}

std::vector<Window> dominant_inverse_filter(const std::vector<Window>& ws) {
    std::vector<Window> out;
    for (const Window& w : ws) {
        const Window inv = invert(w);
        if (std::is_sorted(inv.values().begin(), inv.values().end()) &&
            std::adjacent_find(inv.values().begin(), inv.values().end()) == inv.values().end())
            out.push_back(w);
    }
    return out;
}

ChamberDescriptor chamber_descriptor(const Window& w, int m) {
    if (m < 1) throw Error("BadArgs", "m must be >= 1");
    const Address k = address(w);
    ChamberDescriptor d;
    d.n = w.rank();
    d.m = m;
    d.clamp.reserve(k.raw().size());
    for (int v : k.raw()) d.clamp.push_back(std::min(m, std::max(-m, v)));
    return d;
}

std::uint64_t descriptor_hash(const ChamberDescriptor& d) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    auto mix = [&](std::uint64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (8 * byte)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(d.n));
    mix(static_cast<std::uint64_t>(d.m));
    for (int c : d.clamp) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(c)));
    return h;
}

namespace {

// One inequality sum_i coef[i]*y_i >= rhs over rational y.
struct Row {
    std::vector<Int> coef;
    Int rhs = 0;
};

void normalize(Row& r) {
    Int g = r.rhs < 0 ? -r.rhs : r.rhs;
    for (Int c : r.coef) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1) {
        for (Int& c : r.coef) c /= g;
        r.rhs /= g;
    }
}

// Fourier-Motzkin feasibility of { row : sum coef*y >= rhs }.
bool fm_feasible(std::vector<Row> rows, int vars) {
    for (int v = 0; v < vars; ++v) {
        std::vector<Row> pos, neg, rest;
        for (Row& r : rows) {
            const Int c = r.coef[static_cast<size_t>(v)];
            if (c > 0)
                pos.push_back(std::move(r));
            else if (c < 0)
                neg.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        for (const Row& rp : pos)
            for (const Row& rn : neg) {
                const Int cp = rp.coef[static_cast<size_t>(v)];
                const Int cn = -rn.coef[static_cast<size_t>(v)];
                Row combined;
                combined.coef.resize(static_cast<size_t>(vars));
                for (int i = 0; i < vars; ++i)
                    combined.coef[static_cast<size_t>(i)] =
                        cn * rp.coef[static_cast<size_t>(i)] + cp * rn.coef[static_cast<size_t>(i)];
                combined.rhs = cn * rp.rhs + cp * rn.rhs;
                normalize(combined);
                rest.push_back(std::move(combined));
            }
        // dedupe to keep the row set small
        std::sort(rest.begin(), rest.end(),
                  [](const Row& x, const Row& y) { return std::tie(x.coef, x.rhs) < std::tie(y.coef, y.rhs); });
        rest.erase(std::unique(rest.begin(), rest.end(),
                               [](const Row& x, const Row& y) {
                                   return x.coef == y.coef && x.rhs == y.rhs;
                               }),
                   rest.end());
        rows = std::move(rest);
    }
    for (const Row& r : rows)
        if (r.rhs > 0) return false; // 0 >= rhs fails
    return true;
}

} // namespace

bool is_bounded_chamber(const ChamberDescriptor& d) {
    const int n = d.n;
    // Merge indices tied by pinched roots: those directions must be constant.
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };

    const auto roots = positive_roots(n);
    for (PositiveRoot r : roots) {
        const int c = d.clamp[static_cast<size_t>(root_index(n, r))];
        if (c > -d.m && c < d.m) unite(r.a - 1, r.b - 1);
    }
    std::map<int, int> cls; // representative -> class id
    std::vector<Int> size;
    for (int i = 0; i < n; ++i) {
        const int rep = find(i);
        if (!cls.count(rep)) {
            cls[rep] = static_cast<int>(size.size());
            size.push_back(0);
        }
        ++size[static_cast<size_t>(cls[rep])];
    }
    const int k = static_cast<int>(size.size());
    if (k == 1) return true; // all directions tied to the lineality; cone is trivial

    // Constraints d_a - d_b >= 0 (clamp = m) or <= 0 (clamp = -m) on class
    // values y, with y_{k-1} eliminated via the zero-sum relation.
    const int vars = k - 1;
    std::vector<Row> base;
    for (PositiveRoot r : roots) {
        const int c = d.clamp[static_cast<size_t>(root_index(n, r))];
        if (c > -d.m && c < d.m) continue;
        const int ca = cls[find(r.a - 1)];
        const int cb = cls[find(r.b - 1)];
        if (ca == cb) continue;
        std::vector<Int> full(static_cast<size_t>(k), 0);
        full[static_cast<size_t>(ca)] += (c == d.m) ? 1 : -1;
        full[static_cast<size_t>(cb)] -= (c == d.m) ? 1 : -1;
        Row row;
        row.coef.resize(static_cast<size_t>(vars));
        for (int i = 0; i < vars; ++i)
            row.coef[static_cast<size_t>(i)] =
                size.back() * full[static_cast<size_t>(i)] -
                size[static_cast<size_t>(i)] * full[static_cast<size_t>(k) - 1];
        normalize(row);
        base.push_back(std::move(row));
    }

    // The cone is nonzero iff some coordinate can be pushed to 1.
    for (int j = 0; j < vars; ++j)
        for (int sign : {1, -1}) {
            std::vector<Row> rows = base;
            Row push;
            push.coef.assign(static_cast<size_t>(vars), 0);
            push.coef[static_cast<size_t>(j)] = sign;
            push.rhs = 1;
            rows.push_back(std::move(push));
            if (fm_feasible(std::move(rows), vars)) return false;
        }
    return true;
}

namespace {

struct Accum {
    Window min_alcove{Window::unchecked_t{}, 0, {}};
    Int min_length = -1;
    bool min_tied = false;
    Window max_alcove{Window::unchecked_t{}, 0, {}};
    Int max_length = -1;
    bool max_tied = false;
    Int count = 0;
};

std::map<ChamberDescriptor, Accum> boxed_scan(int n, int m, int box) {
    const Window id = Window::identity(n);
    auto in_box = [&](const Window& w) {
        for (int v : address(w).raw())
            if (v < -box || v > box) return false;
        return true;
    };
    std::map<ChamberDescriptor, Accum> acc;
    auto record = [&](const Window& w) {
        Accum& a = acc[chamber_descriptor(w, m)];
        const Int len = length(w);
        if (a.min_length < 0 || len < a.min_length) {
            a.min_length = len;
            a.min_alcove = w;
            a.min_tied = false;
        } else if (len == a.min_length && w != a.min_alcove) {
            a.min_tied = true;
        }
        if (len > a.max_length) {
            a.max_length = len;
            a.max_alcove = w;
            a.max_tied = false;
        } else if (len == a.max_length && a.max_length >= 0 && w != a.max_alcove) {
            a.max_tied = true;
        }
        ++a.count;
    };

    std::set<Window> seen{id};
    std::queue<Window> frontier;
    frontier.push(id);
    record(id);
    while (!frontier.empty()) {
        const Window w = frontier.front();
        frontier.pop();
        for (int i = 1; i <= n; ++i) {
            Window nb = right_multiply_generator(w, i);
            if (seen.count(nb) || !in_box(nb)) continue;
            seen.insert(nb);
            record(nb);
            frontier.push(std::move(nb));
        }
    }
    return acc;
}

Int power(Int base, int exp) {
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

} // namespace

ChamberCensus census_chambers(int n, int m) {
    if (n < 2) throw Error("BadRank", "rank must be at least 2");
    if (m < 1) throw Error("BadArgs", "m must be >= 1");
    const Int expected = power(static_cast<Int>(m) * n + 1, n - 1);

    // Grow the address box until the minima and the bounded chambers' alcove
    // sets stop changing; the closed-form chamber count certifies coverage.
    std::map<ChamberDescriptor, Accum> prev = boxed_scan(n, m, m + 1);
    const int box_cap = m * (n - 1) + n + 3;
    for (int box = m + 2; box <= box_cap; ++box) {
        std::map<ChamberDescriptor, Accum> cur = boxed_scan(n, m, box);
        bool stable = prev.size() == cur.size() && static_cast<Int>(cur.size()) == expected;
        if (stable) {
            for (auto& [d, a] : cur) {
                const auto it = prev.find(d);
                if (it == prev.end() || it->second.min_alcove != a.min_alcove ||
                    it->second.min_length != a.min_length) {
                    stable = false;
                    break;
                }
                if (is_bounded_chamber(d) &&
                    (it->second.count != a.count || it->second.max_alcove != a.max_alcove)) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable) {
            ChamberCensus census;
            census.n = n;
            census.m = m;
            for (auto& [d, a] : cur) {
                if (a.min_tied)
                    throw Error("NonUniqueMinimum",
                                "two minimum-length alcoves in one chamber (descriptor hash " +
                                    std::to_string(descriptor_hash(d)) + ")");
                ChamberRecord rec;
                rec.descriptor = d;
                rec.min_alcove = a.min_alcove;
                rec.min_length = a.min_length;
                rec.bounded = is_bounded_chamber(d);
                if (rec.bounded) {
                    if (a.max_tied)
                        throw Error("NonUniqueMaximum",
                                    "two maximum-length alcoves in one bounded chamber");
                    rec.max_alcove = a.max_alcove;
                    rec.max_length = a.max_length;
                    rec.alcove_count = a.count;
                }
                census.records.push_back(std::move(rec));
            }
            std::sort(census.records.begin(), census.records.end(),
                      [](const ChamberRecord& x, const ChamberRecord& y) {
                          return x.min_alcove < y.min_alcove;
                      });
            return census;
        }
        prev = std::move(cur);
    }
    throw Error("CensusUnstable", "chamber census did not stabilize within the box cap");
}

std::vector<std::pair<ChamberDescriptor, Window>> enumerate_chambers(int n, int m) {
    const ChamberCensus census = census_chambers(n, m);
    std::vector<std::pair<ChamberDescriptor, Window>> out;
    out.reserve(census.records.size());
    for (const ChamberRecord& r : census.records) out.emplace_back(r.descriptor, r.min_alcove);
    return out;
}

std::vector<Window> max_alcove_of_bounded(int n, int m) {
    const ChamberCensus census = census_chambers(n, m);
    std::vector<Window> out;
    for (const ChamberRecord& r : census.records)
        if (r.bounded) out.push_back(r.max_alcove);
    std::sort(out.begin(), out.end());
    const Int expected = power(static_cast<Int>(m) * n - 1, n - 1);
    if (static_cast<Int>(out.size()) != expected)
        throw Error("CountMismatch", "found " + std::to_string(out.size()) +
                                         " bounded chambers, expected " + std::to_string(expected));
    return out;
}

} // namespace aqt
