#include "qlab/tau.hpp"

#include <numeric>
#include <stdexcept>

#include "qlab/parallel.hpp"
#include "qlab/weights.hpp"

namespace qlab {

std::string to_string(TauLabel label)
{
    switch (label) {
    case TauLabel::one_a: return "1A";
    case TauLabel::one_b: return "1B";
    case TauLabel::two: return "2";
    }
    return "?";
}

int tau_value(const ModelParams& params, int s)
{
    const std::int64_t p = params.p();
    const std::int64_t pp = params.p_prime();
    return static_cast<int>(QExp((s + 1) * p, pp).floor() - QExp((s - 1) * p, pp).floor());
}

TauTable TauTable::from_labels(ModelParams params, std::vector<TauLabel> labels)
{
    if (static_cast<int>(labels.size()) != params.p_prime() - 1) {
        throw std::invalid_argument("TauTable: need one label per site 1..p'-1");
    }
    return TauTable(params, std::move(labels));
}

TauLabel TauTable::label(int s) const
{
    if (s < 1 || s > p_prime() - 1) {
        throw std::out_of_range("TauTable: site " + std::to_string(s) + " out of range");
    }
    return labels_[static_cast<std::size_t>(s - 1)];
}

namespace {

// Regime boundaries compared exactly: t > 3/2 <=> 2p' > 3p, t <= 5/3 <=> 3p' <= 5p.
bool above_three_halves(const ModelParams& m) { return 2 * m.p_prime() > 3 * m.p(); }
bool up_to_five_thirds(const ModelParams& m) { return 3 * m.p_prime() <= 5 * m.p(); }

} // namespace

TauTable make_tau_table(const ModelParams& params)
{
    if (!params.path_regime()) {
        throw std::invalid_argument("make_tau_table: need 1 < t < 2, got " + params.to_string());
    }
    const int pp = params.p_prime();
    std::vector<TauLabel> labels(static_cast<std::size_t>(pp - 1));
    auto at = [&](int s) -> TauLabel& { return labels[static_cast<std::size_t>(s - 1)]; };

    if (up_to_five_thirds(params)) {
        for (int s = 1; s <= pp - 1; ++s) {
            if (tau_value(params, s) == 2) {
                at(s) = TauLabel::two;
            } else {
                at(s) = 2 * s < pp ? TauLabel::one_a : TauLabel::one_b;
            }
        }
        if (above_three_halves(params)) {
            // Site 2 is forced to 1B; its mirror follows by reflection.
            if (at(2) != TauLabel::two) {
                at(2) = TauLabel::one_b;
            }
            if (at(pp - 2) != TauLabel::two) {
                at(pp - 2) = TauLabel::one_a;
            }
        }
    } else {
        TauLabel next = TauLabel::one_a;
        for (int s = 1; s <= pp - 1; ++s) {
            if (tau_value(params, s) == 2) {
                at(s) = TauLabel::two;
                next = TauLabel::one_b;
            } else {
                at(s) = next;
                next = next == TauLabel::one_a ? TauLabel::one_b : TauLabel::one_a;
            }
        }
    }

    TauTable table = TauTable::from_labels(params, std::move(labels));
    const auto violations = tau_table_violations(table);
    if (!violations.empty()) {
        std::string msg = "make_tau_table " + params.to_string() + ":";
        for (const auto& v : violations) {
            msg += " " + v + ";";
        }
        throw std::logic_error(msg);
    }
    return table;
}

std::vector<std::string> tau_table_violations(const TauTable& table)
{
    const ModelParams& params = table.params();
    const int pp = params.p_prime();
    std::vector<std::string> out;
    auto fail = [&](const std::string& name, int s) { out.push_back(name + " at s=" + std::to_string(s)); };
    const bool steep = above_three_halves(params);

    for (int s = 1; s <= pp - 1; ++s) {
        if (table.tau(s) != tau_value(params, s)) {
            fail("numeric tau", s);
        }
    }
    if (tau_value(params, 1) != 1) {
        fail("T1", 1);
    }
    if (tau_value(params, 2) != (steep ? 1 : 2)) {
        fail("T2", 2);
    }
    if (tau_value(params, pp - 1) != 2) {
        fail("T3", pp - 1);
    }
    for (int s = 2; s < pp - 1; ++s) {
        if (tau_value(params, s) != tau_value(params, pp - s)) {
            fail("T4", s);
        }
    }
    if (table.label(1) != TauLabel::one_a) {
        fail("C1", 1);
    }
    if (steep && table.label(2) != TauLabel::one_b) {
        fail("C2", 2);
    }
    for (int s = 2; s < pp - 1; ++s) {
        if (table.tau(s) != 1 || table.tau(pp - s) != 1) {
            continue;
        }
        if ((table.label(s) == TauLabel::one_a) != (table.label(pp - s) == TauLabel::one_b)) {
            fail("R2", s);
        }
    }
    for (int s = 1; s + 2 <= pp - 1; ++s) {
        if (table.label(s) == TauLabel::one_b && table.label(s + 2) == TauLabel::one_a) {
            fail("R3", s);
        }
    }
    if (pp % 2 == 0 && table.label(pp / 2) != TauLabel::two) {
        fail("midpoint", pp / 2);
    }
    if (steep) {
        int last_two = 0;
        for (int s = 1; s <= pp - 1; ++s) {
            if (table.tau(s) != 2) {
                continue;
            }
            if (s + 1 <= pp - 1 && table.tau(s + 1) == 2) {
                fail("L1", s);
            }
            if (last_two > 0 && (s - last_two - 1) % 2 != 0) {
                fail("L3", last_two);
            }
            last_two = s;
        }
    }

    const ConformalData cd(params);
    for (int b = 1; b <= pp - 1; ++b) {
        for (int a = b - 2; a <= b + 2; a += 2) {
            for (int c = b - 2; c <= b + 2; c += 2) {
                if (!valid_step(a, b, pp) || !valid_step(b, c, pp)) {
                    continue;
                }
                const QExp w = weight(a, b, c, table);
                if (w != weight(pp - a, pp - b, pp - c, table)) {
                    fail("SYM", b);
                }
                if (w != weight(c, b, a, table)) {
                    fail("left-right", b);
                }
                for (int r = 1; r <= params.p() - 1; ++r) {
                    const QExp d = w - cd.delta(r, a) + cd.delta(r, b) * QExp(2) - cd.delta(r, c);
                    if (!d.is_integer()) {
                        fail("WEI r=" + std::to_string(r), b);
                    }
                }
            }
        }
    }
    return out;
}

SuiteReport verify_tau_tables(int pp_max, unsigned jobs)
{
    SuiteReport report;
    report.suite = "tau";
    report.identity = "labelling of tau(s) = [(s+1)/t] - [(s-1)/t] into 1A/1B/2 satisfies the site, "
                      "reflection, block-parity and weight-symmetry constraints";
    report.params = {{"pp_max", pp_max}};
    std::vector<ModelParams> models;
    for (int pp = 4; pp <= pp_max; ++pp) {
        for (int p = 3; p < pp; ++p) {
            if (std::gcd(p, pp) == 1 && pp < 2 * p) {
                models.emplace_back(p, pp);
            }
        }
    }
    report.cases = parallel_map<CaseResult>(models.size(), jobs, [&](std::size_t i) {
        const ModelParams& m = models[i];
        const std::string id = "tau p=" + std::to_string(m.p()) + " pp=" + std::to_string(m.p_prime());
        try {
            const TauTable table = make_tau_table(m);
            std::string labels;
            for (TauLabel l : table.labels()) {
                labels += (labels.empty() ? "" : ",") + to_string(l);
            }
            return pass_case(id, labels);
        } catch (const std::logic_error& e) {
            return fail_case(id, e.what());
        }
    });
    return report;
}

} // namespace qlab
