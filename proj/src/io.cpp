#include "aqt/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace aqt {

Int to_int64(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<Int>::min();
    static const BigInt hi = std::numeric_limits<Int>::max();
    if (v < lo || v > hi) throw Error("Overflow", "value does not fit in 64 bits");
    return v.convert_to<Int>();
}

json window_json(const Window& w) { return json(w.values()); }

json stat_record_json(const Window& w) {
    json rec;
    rec["window"] = window_json(w);
    rec["length"] = length(w);
    rec["shi"] = shi(w);
    rec["ish"] = ish_closed(w);
    rec["ish_inv"] = ish_inv(w);
    const InversionPartition part = inversion_partition(w);
    rec["inversion_partition"] = json(part.counts);
    json by_m = json::object();
    const int m_top = static_cast<int>(part.counts.size()) + 1;
    for (int m = 1; m <= m_top; ++m) by_m[std::to_string(m)] = shi_m(w, m);
    rec["shi_m"] = std::move(by_m);
    return rec;
}

json qpoly_json(const QPoly& p) {
    json coeffs = json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(to_int64(c));
    return json{{"coeffs", std::move(coeffs)}};
}

json qtpoly_json(const QTPoly& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back(json::array({k.first, k.second, to_int64(c)}));
    return json{{"terms", std::move(terms)}};
}

json labeled_path_json(const LabeledPath& p) {
    json ideal = json::array();
    for (PositiveRoot r : p.ideal.members()) ideal.push_back(json::array({r.a, r.b}));
    return json{{"w", json(p.w.images())}, {"ideal", std::move(ideal)}};
}

json matrix_json(const std::vector<std::vector<BigInt>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const BigInt& c : row) r.push_back(to_int64(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

json report_json(const VerificationReport& r) {
    json cases = json::array();
    for (const VerifyCase& c : r.cases) {
        json params = json::object();
        for (const auto& [k, v] : c.parameters) params[k] = v;
        cases.push_back(json{{"claim", c.claim},
                             {"parameters", std::move(params)},
                             {"status", c.status},
                             {"expected", c.expected},
                             {"actual", c.actual}});
    }
    return json{{"suite", r.suite}, {"cases", std::move(cases)}, {"ok", r.ok()}};
}

std::string matrix_csv(const std::vector<std::vector<BigInt>>& m) {
    std::ostringstream out;
    out << "shi";
    if (!m.empty())
        for (size_t c = 0; c < m.front().size(); ++c) out << ',' << c;
    out << '\n';
    for (size_t r = 0; r < m.size(); ++r) {
        out << r;
        for (const BigInt& c : m[r]) out << ',' << c;
        out << '\n';
    }
    return out.str();
}

std::string census_csv(const ChamberCensus& census) {
    std::ostringstream out;
    out << "descriptor_hash,min_window,length,bounded\n";
    for (const ChamberRecord& rec : census.records) {
        out << std::hex << descriptor_hash(rec.descriptor) << std::dec << ",\""
            << format_window(rec.min_alcove) << "\"," << rec.min_length << ','
            << (rec.bounded ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "suite " << r.suite << '\n';
    for (const VerifyCase& c : r.cases) {
        out << "  [" << c.status << "] " << c.claim;
        if (!c.parameters.empty()) {
            out << " (";
            bool first = true;
            for (const auto& [k, v] : c.parameters) {
                if (!first) out << ", ";
                out << k << '=' << v;
                first = false;
            }
            out << ')';
        }
        if (c.status == "mismatch") out << "\n    expected: " << c.expected << "\n    actual:   " << c.actual;
        out << '\n';
    }
    out << (r.ok() ? "OK" : "MISMATCH") << '\n';
    return out.str();
}

} // namespace aqt
