#include <doctest.h>

#include <stdexcept>

#include "qlab/fusion.hpp"
#include "qlab/qfunctions.hpp"
#include "qlab/supernomial.hpp"

using namespace qlab;

TEST_CASE("Gaussian binomials")
{
    CHECK(compare(q_binomial(2, 1), QSeries::from_dense({1, 1})).equal);
    CHECK(compare(q_binomial(4, 2), QSeries::from_dense({1, 1, 2, 1, 1})).equal);
    CHECK(compare(q_binomial(5, 0), QSeries::one()).equal);
    CHECK(q_binomial(3, 4).empty());
    CHECK(q_binomial(3, -1).empty());
    CHECK(q_binomial(7, 3).eval_at_one() == 35);
}

TEST_CASE("Gaussian binomials with negative upper index")
{
    // [-1, a] = (-1)^a q^{-a(a+1)/2}
    for (std::int64_t a = 0; a <= 4; ++a) {
        const QSeries s = q_binomial(-1, a);
        CHECK(s.terms().size() == 1);
        CHECK(s.coeff(QExp(-a * (a + 1) / 2)) == (a % 2 == 0 ? 1 : -1));
    }
    // Pascal rule [L, a] = [L-1, a-1] + q^a [L-1, a] holds for every L
    for (std::int64_t L = -4; L <= 4; ++L) {
        for (std::int64_t a = 1; a <= 4; ++a) {
            const QSeries rhs = q_binomial(L - 1, a - 1) + q_binomial(L - 1, a).shifted(QExp(a));
            CHECK(compare(q_binomial(L, a), rhs).equal);
        }
    }
}

TEST_CASE("(q)_m")
{
    CHECK(compare(poch(0), QSeries::one()).equal);
    CHECK(compare(poch(2), QSeries::from_dense({1, -1, -1, 1})).equal);
}

TEST_CASE("q-trinomials factor through two binomials")
{
    CHECK_THROWS_AS(q_trinomial(3, 1, 1, 0), std::invalid_argument);
    CHECK(q_trinomial(3, 1, 2, 0).eval_at_one() == 3);
    CHECK(q_trinomial(4, 2, 1, 1).eval_at_one() == 12);
    CHECK(q_trinomial(4, -1, 4, 1).empty());
}

TEST_CASE("two-row supernomials: base row and first exact sequence")
{
    // [2, 0; a] = [2, a+1]
    CHECK(compare(supernomial2(2, 0, QExp(0)), QSeries::from_dense({1, 1})).equal);
    // pi_2: [0, 1; a] = 1 for a in {-1, 0, 1}
    for (int a = -1; a <= 1; ++a) {
        CHECK(compare(supernomial2(0, 1, QExp(a)), QSeries::one()).equal);
    }
    CHECK(supernomial2(0, 1, QExp(2)).empty());
    CHECK(supernomial2(1, 0, QExp(0)).empty());
    CHECK(compare(supernomial2(1, 0, QExp(1, 2)), QSeries::one()).equal);
    CHECK_THROWS(supernomial2(-1, 0, QExp(0)));
}

TEST_CASE("property: [0, m; a] is the reflected supernomial S_{m,a}(q^{-1})")
{
    for (std::int64_t m = 0; m <= 7; ++m) {
        for (std::int64_t a = -m - 1; a <= m + 1; ++a) {
            CHECK(compare(supernomial2(0, m, QExp(a)), S(m, a).flipped()).equal);
        }
    }
}

TEST_CASE("property: two-row supernomials are weight symmetric and dimension 2^L1 3^L2")
{
    for (std::int64_t L1 = 0; L1 <= 6; ++L1) {
        for (std::int64_t L2 = 0; L2 <= 4; ++L2) {
            const QZChar c = ch_mixed_fused(L1, L2);
            CHECK(c.weight_symmetric());
            Coeff dim = 1;
            for (int i = 0; i < L1; ++i) {
                dim *= 2;
            }
            for (int i = 0; i < L2; ++i) {
                dim *= 3;
            }
            CHECK(c.eval_at_one() == dim);
            for (const auto& kv : c.components()) {
                CHECK(nonnegative(kv.second));
            }
        }
    }
}
