#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace qlab {

enum class CaseStatus { pass, fail, skipped };

std::string to_string(CaseStatus s);

struct CaseResult {
    std::string id;
    CaseStatus status = CaseStatus::pass;
    std::string detail;
};

/// Outcome of one verification suite. Cases keep their generation order,
/// which is fixed for given inputs and independent of the worker count.
struct SuiteReport {
    std::string suite;
    /// Human-readable statement of the identity being checked.
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    std::vector<CaseResult> cases;
    double wall_seconds = 0.0;

    bool passed() const;
    std::size_t count(CaseStatus s) const;
    /// {suite, identity, params, cases:[{id,status,detail}], summary}. Wall
    /// time is left out so that output is reproducible byte for byte.
    nlohmann::json to_json() const;
};

CaseResult pass_case(std::string id, std::string detail = {});
CaseResult fail_case(std::string id, std::string detail);
CaseResult check_case(std::string id, bool ok, std::string detail);

} // namespace qlab
