#pragma once

#include <string>
#include <vector>

#include "plab/check.hpp"

namespace plab {

// One executed suite entry: the check (or construction) and its outcome.
struct SuiteRecord {
    std::string op;
    std::vector<std::string> args;
    std::string out; // derive target, empty for checks
    CheckReport report;
};

struct Report {
    std::vector<SuiteRecord> records;
    bool pass() const {
        for (const auto& r : records)
            if (!r.report.pass()) return false;
        return true;
    }
};

// format is "text" or "json". The JSON document contains only strings,
// arrays and objects (rationals and indices are serialized as strings) and
// is byte-stable for a given report.
std::string emit_report(const Report& rep, const std::string& format);

} // namespace plab
