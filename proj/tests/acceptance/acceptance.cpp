#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qlab/config_sum.hpp"
#include "qlab/fusion.hpp"
#include "qlab/model.hpp"
#include "qlab/parallel.hpp"
#include "qlab/supernomial.hpp"
#include "qlab/tau.hpp"
#include "qlab/virasoro.hpp"

using namespace qlab;

namespace {

// "to degree d" means every exponent <= d is compared, i.e. a cutoff of d + 1.
constexpr int kRecurrenceMMax = 8;
constexpr int kXandfMMax = 5;
constexpr int kRocha2Degree = 40;
constexpr std::size_t kRocha2MinInstances = 12;
constexpr int kGenMMax = 6;
constexpr int kRiggedDegree = 20;
constexpr int kPi2Pi3Degree = 30;
constexpr int kPmnNMax = 6;
constexpr int kGradingMMax = 6;
constexpr int kGradingDegree = 40;
constexpr int kAbfN = 20;
constexpr int kAbfK = 1;
constexpr int kAbfDegree = 15;
constexpr int kTauPpMax = 40;

const std::vector<std::pair<int, int>> kModels{{3, 4}, {4, 5}, {5, 7}, {4, 7}, {5, 8}};

struct Outcome {
    bool ok = true;
    std::size_t cases = 0;
    std::string note;

    void absorb(const SuiteReport& r)
    {
        cases += r.cases.size();
        if (!r.passed()) {
            ok = false;
            for (const auto& c : r.cases) {
                if (c.status != CaseStatus::pass) {
                    note = r.suite + ": " + c.id + " " + c.detail;
                    break;
                }
            }
        }
    }
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<Outcome(unsigned)> run;
};

Outcome over_models(const std::function<SuiteReport(const TauTable&)>& suite)
{
    Outcome o;
    for (auto [p, pp] : kModels) {
        o.absorb(suite(make_tau_table(ModelParams(p, pp))));
    }
    return o;
}

std::vector<Criterion> criteria()
{
    return {
        {1, "supernomial recurrences, m <= 8, |l| <= m+1", 10.0,
         [](unsigned jobs) {
             Outcome o;
             o.absorb(verify_S_recurrences(kRecurrenceMMax + 1, jobs));
             return o;
         }},
        {2, "X by recurrence = alternating f-sum, 5 models, m <= 5", 60.0,
         [](unsigned jobs) {
             return over_models([jobs](const TauTable& t) { return verify_Xandf(t, kXandfMMax, jobs); });
         }},
        {3, "character = sum_m I_m/(q)_m to degree 40, >= 12 instances incl. non-minimising b", 60.0,
         [](unsigned jobs) {
             const auto instances = default_rocha2_instances();
             Outcome o;
             bool non_minimal = false;
             for (const auto& inst : instances) {
                 non_minimal = non_minimal || inst.b != b_of(inst.r, inst.a, ConformalData(inst.params));
             }
             o.absorb(verify_rocha2(instances, QExp(kRocha2Degree + 1), jobs));
             if (instances.size() < kRocha2MinInstances || !non_minimal) {
                 o.ok = false;
                 o.note = "instance set too small or lacks a non-minimising b";
             }
             return o;
         }},
        {4, "path sums = I_m, 5 models, all (r,a), m <= 6", 120.0,
         [](unsigned jobs) {
             return over_models([jobs](const TauTable& t) { return verify_GEN(t, kGenMMax, jobs); });
         }},
        {5, "rigged-path oracle = character to degree 20, (3,4) and (4,5), all (r,a)", 180.0,
         [](unsigned jobs) {
             Outcome o;
             for (auto [p, pp] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}}) {
                 o.absorb(verify_rigged(make_tau_table(ModelParams(p, pp)), QExp(kRiggedDegree + 1), jobs));
             }
             return o;
         }},
        {6, "level-1 vacuum = fused pi_2 series to degree 30, all z-components", 30.0,
         [](unsigned) {
             Outcome o;
             o.absorb(verify_pi2pi3(QExp(kPi2Pi3Degree + 1)));
             return o;
         }},
        {7, "pi_1 fusion in terms of pi_2 fusion, N <= 6, all z-components", 10.0,
         [](unsigned) {
             Outcome o;
             o.absorb(verify_pmn(kPmnNMax));
             return o;
         }},
        {8, "(1,3) grading, k = 1..3, m <= 6: nonnegative, sum to degree 40, routes agree", 120.0,
         [](unsigned jobs) {
             Outcome o;
             for (int k = 1; k <= 3; ++k) {
                 o.absorb(verify_grading(k, kGradingMMax, QExp(kGradingDegree + 1), jobs));
             }
             return o;
         }},
        {9, "finitized Ising characters at N = 20 to degree 15", 30.0,
         [](unsigned) {
             Outcome o;
             o.absorb(verify_abf(kAbfN, kAbfK, kAbfDegree));
             return o;
         }},
        {10, "tau tables valid for every p' <= 40, 1 < t < 2", 10.0,
         [](unsigned jobs) {
             Outcome o;
             o.absorb(verify_tau_tables(kTauPpMax, jobs));
             return o;
         }},
    };
}

} // namespace

int main()
{
    const unsigned jobs = default_jobs();
    int failures = 0;
    for (const Criterion& c : criteria()) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(jobs);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs >= c.limit_seconds) {
            o.ok = false;
            o.note = "over the time limit";
        }
        if (!o.ok) {
            ++failures;
        }
        std::printf("[%s] %d %s (%zu cases, %.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), o.cases, secs, c.limit_seconds, o.note.empty() ? "" : ": ", o.note.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
