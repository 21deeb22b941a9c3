#include <doctest.h>

#include <stdexcept>

#include "qlab/paths.hpp"
#include "qlab/qfunctions.hpp"
#include "qlab/virasoro.hpp"

using namespace qlab;

namespace {

const std::vector<std::pair<int, int>> kModels{{3, 4}, {4, 5}, {5, 7}, {4, 7}, {5, 8}};

} // namespace

TEST_CASE("quadratic window")
{
    auto w = quadratic_window(QExp(1), QExp(0), QExp(0), QExp(10));
    REQUIRE(w.has_value());
    CHECK(w->first == -3);
    CHECK(w->second == 3);
    CHECK_FALSE(quadratic_window(QExp(1), QExp(0), QExp(5), QExp(5)).has_value());
    w = quadratic_window(QExp(2), QExp(-7), QExp(0), QExp(1));
    REQUIRE(w.has_value());
    CHECK(w->first == 0);
    CHECK(w->second == 3);
}

TEST_CASE("Ising vacuum character")
{
    const QSeries chi = rocha_caridi(ModelParams(3, 4), 1, 1, QExp(7));
    CHECK(compare(chi, QSeries::from_dense({1, 0, 1, 1, 2, 2, 3}, 0)).equal);
}

TEST_CASE("property: characters start at 1 and obey the Kac symmetry")
{
    for (auto [p, pp] : kModels) {
        const ModelParams mp(p, pp);
        for (int r = 1; r < p; ++r) {
            for (int s = 1; s < pp; ++s) {
                const QSeries chi = rocha_caridi(mp, r, s, QExp(40));
                CHECK(chi.coeff(QExp(0)) == 1);
                CHECK(*chi.floor() == QExp(0));
                CHECK(nonnegative(chi));
                CHECK(compare(chi, rocha_caridi(mp, p - r, pp - s, QExp(40))).equal);
            }
        }
    }
}

TEST_CASE("graded pieces: initial values")
{
    const ModelParams ising(3, 4);
    CHECK(compare(I_m(ising, 1, 1, 1, 0), QSeries::one()).equal);
    CHECK(I_m(ising, 1, 1, 3, 0).empty());
    CHECK(compare(I_m(ising, 1, 3, 1, 1), QSeries::one()).equal);
    CHECK_THROWS_AS(I_m(ising, 1, 1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(I_m(ising, 1, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("property: graded pieces are nonnegative and count paths at q = 1")
{
    for (auto [p, pp] : kModels) {
        const ModelParams mp(p, pp);
        const ConformalData cd(mp);
        for (int r = 1; r < p; ++r) {
            for (int a = 1; a < pp; ++a) {
                const int b = b_of(r, a, cd);
                for (std::int64_t m = 0; m <= 8; ++m) {
                    const QSeries im = I_m(mp, r, a, b, m);
                    CHECK(nonnegative(im));
                    CHECK(im.eval_at_one() == count_paths(a, b, m, mp));
                    const auto lo = I_m_min_exponent(mp, r, a, b, m);
                    if (!im.empty()) {
                        REQUIRE(lo.has_value());
                        CHECK(*lo <= *im.floor());
                    }
                }
            }
        }
    }
}

TEST_CASE("truncated graded pieces agree with the exact ones")
{
    const ModelParams mp(5, 8);
    for (std::int64_t m = 0; m <= 6; ++m) {
        CHECK(compare(I_m(mp, 2, 3, 3, m, QExp(5)), I_m(mp, 2, 3, 3, m)).equal);
    }
}

TEST_CASE("expansion of 1/(q)_inf")
{
    CHECK(verify_expansion_identity(5, QExp(41)).passed());
}

TEST_CASE("character as a sum over m, including non-minimising b")
{
    const auto instances = default_rocha2_instances();
    CHECK(instances.size() >= 12);
    bool non_minimal = false;
    for (const auto& inst : instances) {
        non_minimal = non_minimal || inst.b != b_of(inst.r, inst.a, ConformalData(inst.params));
    }
    CHECK(non_minimal);
    CHECK(check_rocha2(Rocha2Instance{ModelParams(3, 4), 1, 1, 3}, QExp(21)).status == CaseStatus::pass);
    CHECK(check_rocha2(Rocha2Instance{ModelParams(4, 7), 2, 3, 5}, QExp(21)).status == CaseStatus::pass);
}

TEST_CASE("path side of the graded pieces")
{
    const TauTable t = make_tau_table(ModelParams(3, 4));
    // one path (1,3,1) of energy 1 and boundary term 2 (Delta(1,3) - Delta(1,1)) = 1
    CHECK(compare(path_side_GEN(t, 1, 1, 1, 2), QSeries::monomial(QExp(2))).equal);
    CHECK(compare(path_side_GEN(t, 1, 1, 1, 2), I_m(t.params(), 1, 1, 1, 2)).equal);
    CHECK_THROWS_AS(path_side_GEN(t, 1, 1, 3, 2), std::invalid_argument);
}

TEST_CASE("graded pieces equal path sums")
{
    CHECK(verify_GEN(make_tau_table(ModelParams(3, 4)), 8).passed());
    CHECK(verify_GEN(make_tau_table(ModelParams(5, 8)), 5, 2).passed());
    CHECK(verify_IandS(make_tau_table(ModelParams(4, 7)), 5).passed());
}

TEST_CASE("a mislabelled tau table breaks the path sums")
{
    const ModelParams mp(4, 7);
    auto labels = make_tau_table(mp).labels();
    std::swap(labels[0], labels[1]);
    CHECK_FALSE(verify_GEN(TauTable::from_labels(mp, labels), 4).passed());
}

TEST_CASE("rigged paths: Ising characters")
{
    const TauTable t = make_tau_table(ModelParams(3, 4));
    const ConformalData cd(t.params());
    for (int a = 1; a <= 3; ++a) {
        const QSeries gf = rigged_path_gf(t, 1, a, QExp(12));
        CHECK(gf.cutoff() == cd.delta(1, a) + QExp(12));
        CHECK(*gf.floor() == cd.delta(1, a));
        CHECK(compare(gf, rocha_caridi(t.params(), 1, a, QExp(12)).shifted(cd.delta(1, a))).equal);
    }
    CHECK(verify_rigged(make_tau_table(ModelParams(4, 5)), QExp(11)).passed());
}
