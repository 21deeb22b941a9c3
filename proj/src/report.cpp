#include "qlab/report.hpp"

#include <algorithm>

namespace qlab {

std::string to_string(CaseStatus s)
{
    switch (s) {
    case CaseStatus::pass:
        return "pass";
    case CaseStatus::fail:
        return "fail";
    case CaseStatus::skipped:
        return "skipped";
    }
    return "unknown";
}

bool SuiteReport::passed() const { return count(CaseStatus::fail) == 0; }

std::size_t SuiteReport::count(CaseStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : cases) {
        jc.push_back({{"id", c.id}, {"status", qlab::to_string(c.status)}, {"detail", c.detail}});
    }
    return {{"suite", suite},
            {"identity", identity},
            {"params", params},
            {"cases", std::move(jc)},
            {"summary",
             {{"pass", count(CaseStatus::pass)},
              {"fail", count(CaseStatus::fail)},
              {"skipped", count(CaseStatus::skipped)}}}};
}

CaseResult pass_case(std::string id, std::string detail)
{
    return {std::move(id), CaseStatus::pass, std::move(detail)};
}

CaseResult fail_case(std::string id, std::string detail)
{
    return {std::move(id), CaseStatus::fail, std::move(detail)};
}

CaseResult check_case(std::string id, bool ok, std::string detail)
{
    return {std::move(id), ok ? CaseStatus::pass : CaseStatus::fail, std::move(detail)};
}

} // namespace qlab
