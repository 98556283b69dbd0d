#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aqt/arr.hpp"
#include "aqt/paths.hpp"
#include "aqt/qt.hpp"
#include "aqt/regions.hpp"
#include "aqt/stats.hpp"
#include "aqt/verify.hpp"
#include "aqt/window.hpp"

namespace aqt {

using json = nlohmann::json;

/// Checked narrowing; coefficients beyond 64 bits would be lost in JSON.
Int to_int64(const BigInt& v);

json window_json(const Window& w);

/// {"window":[...],"length":L,"shi":a,"ish":b,"shi_m":{...},"ish_inv":c,
///  "inversion_partition":[...]}
json stat_record_json(const Window& w);

json qpoly_json(const QPoly& p);                 // {"coeffs":[c0,c1,...]}
json qtpoly_json(const QTPoly& p);               // {"terms":[[a,b,c],...]} sorted by (a,b)
json labeled_path_json(const LabeledPath& p);    // {"w":[...],"ideal":[[i,j],...]}
json matrix_json(const std::vector<std::vector<BigInt>>& m);
json report_json(const VerificationReport& r);

std::string matrix_csv(const std::vector<std::vector<BigInt>>& m);
std::string census_csv(const ChamberCensus& census);
std::string report_text(const VerificationReport& r);

} // namespace aqt
