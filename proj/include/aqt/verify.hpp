#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aqt/base.hpp"

namespace aqt {

/// One checked claim instance. Status is "proved-match" for theorems,
/// "conjecture-match" for open claims that held on the tested instances,
/// and "mismatch" when the check failed.
struct VerifyCase {
    std::string claim;
    std::map<std::string, Int> parameters;
    std::string status;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    bool ok() const;
};

struct SuiteOptions {
    int n_max = 0;            // 0 = suite default
    Int cases = 10'000;       // randomized-case budget
    std::uint64_t seed = 20260809;
    Int budget = 400'000'000; // finite-field point budget
};

const std::vector<std::string>& suite_names();

/// Runs one named suite: assertions, conjectures-positive,
/// conjectures-negative, bijection, inverse-statistics, charpoly, census,
/// or mystery-case. Throws UnknownSuite otherwise.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt = {});

} // namespace aqt
