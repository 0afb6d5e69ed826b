#pragma once

#include <functional>
#include <string>
#include <vector>

#include "friezelink/core.hpp"

namespace friezelink {

struct PropertyResult {
    std::string id;
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> witnesses; // first few failing cases
    double seconds = 0.0;
    bool ok() const { return failed == 0; }
};

struct SweepReport {
    std::vector<PropertyResult> results;
    bool ok() const;
    std::string text() const;
    std::string json() const;
    std::string csv() const;
};

struct SuiteSpec {
    std::string name;
    long long default_bound; // interpreted per suite (max q, or max term sum)
    std::string description;
};

const std::vector<SuiteSpec>& suite_specs();

/// Runs one named suite. max_q <= 0 keeps the suite's default bound; jobs is
/// the worker thread count for the per-fraction sweeps.
PropertyResult run_suite(const std::string& name, long long max_q, int jobs);

/// Runs all suites (or the one named); unknown names throw.
SweepReport run_verification(const std::string& suite, long long max_q, int jobs);

} // namespace friezelink
