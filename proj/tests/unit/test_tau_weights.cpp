#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "qlab/model.hpp"
#include "qlab/tau.hpp"
#include "qlab/weights.hpp"

using namespace qlab;

namespace {

std::vector<std::string> labels_of(const TauTable& t)
{
    std::vector<std::string> out;
    for (auto l : t.labels()) {
        out.push_back(to_string(l));
    }
    return out;
}

} // namespace

TEST_CASE("model parameters are validated")
{
    CHECK_THROWS_AS(ModelParams(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(5, 4), std::invalid_argument);
    CHECK(ModelParams(3, 4).path_regime());
    CHECK_FALSE(ModelParams(3, 7).path_regime());
    CHECK(ModelParams(5, 8).t() == QExp(8, 5));
}

TEST_CASE("conformal data")
{
    const ConformalData ising(ModelParams(3, 4));
    CHECK(ising.central_charge() == QExp(1, 2));
    CHECK(ising.delta(1, 1) == QExp(0));
    CHECK(ising.delta(1, 2) == QExp(1, 16));
    CHECK(ising.delta(1, 3) == QExp(1, 2));
    for (auto [p, pp] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {5, 7}, {4, 7}, {5, 8}, {7, 9}}) {
        const ConformalData cd{ModelParams(p, pp)};
        CHECK(cd.delta(1, 1) == QExp(0));
        for (int r = 1; r < p; ++r) {
            for (int s = 1; s < pp; ++s) {
                CHECK(cd.delta(r, s) == cd.delta(p - r, pp - s));
                CHECK((4LL * p * pp) % cd.delta(r, s).den() == 0);
            }
        }
    }
    CHECK(ConformalData(ModelParams(4, 5)).central_charge() == QExp(7, 10));
}

TEST_CASE("boundary site b(r, a)")
{
    for (int k = 1; k <= 4; ++k) {
        const ConformalData cd{ModelParams(k + 2, k + 3)};
        for (int r = 1; r <= k + 1; ++r) {
            for (int a = 1; a <= k + 2; ++a) {
                CHECK(b_of(r, a, cd) == ((r - a) % 2 == 0 ? r : r + 1));
            }
        }
    }
    const ConformalData ising{ModelParams(3, 4)};
    CHECK(b_of(1, 3, ising) == 1);
    // (5,7), r = 2: |2*7 - 5b| is least for odd b at b = 3
    CHECK(b_of(2, 1, ConformalData(ModelParams(5, 7))) == 3);
}

TEST_CASE("tau labels for the Ising model")
{
    const TauTable t = make_tau_table(ModelParams(3, 4));
    CHECK(labels_of(t) == std::vector<std::string>{"1A", "2", "2"});
}

TEST_CASE("tau labels in the regime 5/3 < t < 2")
{
    const TauTable t = make_tau_table(ModelParams(4, 7));
    CHECK(t.label(1) == TauLabel::one_a);
    CHECK(t.label(2) == TauLabel::one_b);
    CHECK(labels_of(t) == std::vector<std::string>{"1A", "1B", "1A", "1B", "1A", "2"});
}

TEST_CASE("tau labels in the regime 3/2 < t <= 5/3 respect the site-2 constraint")
{
    const ModelParams mp(5, 8);
    const TauTable t = make_tau_table(mp);
    CHECK(t.label(1) == TauLabel::one_a);
    CHECK(t.label(2) == TauLabel::one_b);
    CHECK(t.label(6) == TauLabel::one_a);
    CHECK(t.label(4) == TauLabel::two);
    // the plain s < p'/2 rule would put 1A at site 2
    std::vector<TauLabel> plain;
    for (int s = 1; s < mp.p_prime(); ++s) {
        if (tau_value(mp, s) == 2) {
            plain.push_back(TauLabel::two);
        } else {
            plain.push_back(2 * s < mp.p_prime() ? TauLabel::one_a : TauLabel::one_b);
        }
    }
    const auto violations = tau_table_violations(TauTable::from_labels(mp, plain));
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().rfind("C2", 0) == 0);
}

TEST_CASE("even p' puts a 2 at the midpoint")
{
    for (int pp = 4; pp <= 40; pp += 2) {
        for (int p = 3; p < pp; ++p) {
            if (std::gcd(p, pp) == 1 && pp < 2 * p) {
                CHECK(make_tau_table(ModelParams(p, pp)).label(pp / 2) == TauLabel::two);
            }
        }
    }
}

TEST_CASE("tau table construction is refused outside 1 < t < 2")
{
    CHECK_THROWS_AS(make_tau_table(ModelParams(3, 7)), std::invalid_argument);
}

TEST_CASE("the validator flags a broken labelling")
{
    const ModelParams mp(4, 7);
    auto labels = make_tau_table(mp).labels();
    std::swap(labels[0], labels[1]);
    const auto v = tau_table_violations(TauTable::from_labels(mp, labels));
    CHECK_FALSE(v.empty());
    CHECK_THROWS_AS(TauTable::from_labels(mp, {TauLabel::two}), std::invalid_argument);
}

TEST_CASE("tau suite over every model with p' <= 40")
{
    const SuiteReport r = verify_tau_tables(40);
    CHECK(r.passed());
    CHECK(r.cases.size() > 100);
}

TEST_CASE("weights of straight steps")
{
    for (auto [p, pp] : std::vector<std::pair<int, int>>{{3, 4}, {5, 7}, {4, 7}, {5, 8}}) {
        const TauTable t = make_tau_table(ModelParams(p, pp));
        for (int s = 3; s <= pp - 3; ++s) {
            CHECK(weight(s - 2, s, s + 2, t) == QExp(2 * p, pp));
            CHECK(weight(s + 2, s, s - 2, t) == QExp(2 * p, pp));
        }
    }
}

TEST_CASE("Ising peak and valley weights")
{
    const TauTable t = make_tau_table(ModelParams(3, 4));
    CHECK(weight(1, 3, 1, t) == QExp(1));
    CHECK(weight(3, 1, 3, t) == QExp(1));
    CHECK(weight(2, 2, 2, t) == QExp(1));
    CHECK_THROWS_AS(weight(1, 1, 3, t), std::invalid_argument);
    CHECK_THROWS_AS(weight(3, 3, 1, t), std::invalid_argument);
    CHECK_THROWS_AS(weight(1, 4, 1, t), std::invalid_argument);
    CHECK_THROWS_AS(weight(2, 4, 2, t), std::invalid_argument);
}

TEST_CASE("peak weights near the edges")
{
    // w(1,3,1) = w(p'-1,p'-2,p'-1) = 4 - 4/t; w(2,4,2) = 5 - 6/t for 3/2 < t < 2
    for (auto [p, pp] : std::vector<std::pair<int, int>>{{4, 7}, {5, 8}, {5, 9}, {7, 12}}) {
        const TauTable t = make_tau_table(ModelParams(p, pp));
        CHECK(weight(1, 3, 1, t) == QExp(4) - QExp(4 * p, pp));
        CHECK(weight(pp - 1, pp - 3, pp - 1, t) == QExp(4) - QExp(4 * p, pp));
        CHECK(weight(2, 4, 2, t) == QExp(5) - QExp(6 * p, pp));
    }
    // 6 - 6/t for 1 < t < 3/2
    const TauTable t = make_tau_table(ModelParams(5, 7));
    CHECK(weight(2, 4, 2, t) == QExp(6) - QExp(30, 7));
}

TEST_CASE("property: weight symmetries and coset condition")
{
    for (auto [p, pp] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {5, 7}, {4, 7}, {5, 8}, {7, 11}, {11, 19}}) {
        const ModelParams mp(p, pp);
        const TauTable t = make_tau_table(mp);
        const ConformalData cd(mp);
        for (int b = 1; b < pp; ++b) {
            for (int a = b - 2; a <= b + 2; a += 2) {
                for (int c = b - 2; c <= b + 2; c += 2) {
                    if (!valid_step(a, b, pp) || !valid_step(b, c, pp)) {
                        continue;
                    }
                    const QExp w = weight(a, b, c, t);
                    CHECK(w == weight(c, b, a, t));
                    CHECK(w == weight(pp - a, pp - b, pp - c, t));
                    for (int r = 1; r < p; ++r) {
                        CHECK((w - cd.delta(r, a) + QExp(2) * cd.delta(r, b) - cd.delta(r, c)).is_integer());
                    }
                }
            }
        }
    }
}
