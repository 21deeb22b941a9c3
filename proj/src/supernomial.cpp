#include "qlab/supernomial.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "qlab/detail/dense.hpp"
#include "qlab/parallel.hpp"
#include "qlab/series_json.hpp"

namespace qlab {

namespace {

struct NuRange {
    std::int64_t lo;
    std::int64_t hi;
};

// Values of nu where [m, nu][nu, m-l-nu] is nonzero.
NuRange nu_range(std::int64_t m, std::int64_t l)
{
    const std::int64_t diff = m - l;
    const std::int64_t half = diff >= 0 ? (diff + 1) / 2 : -((-diff) / 2);
    return {std::max<std::int64_t>(0, half), std::min(m, m - l)};
}

std::int64_t prefactor(SupernomialKind kind, std::int64_t m, std::int64_t l, std::int64_t nu)
{
    const std::int64_t eps = kind == SupernomialKind::tilde ? 1 : 0;
    return (nu + l - m) * (nu + l - eps) + nu * (nu - m);
}

} // namespace

QSeries supernomial(SupernomialKind kind, std::int64_t m, std::int64_t l, std::optional<QExp> cutoff)
{
    if (m < 0) {
        throw std::invalid_argument("supernomial: m must be nonnegative");
    }
    QSeries::Terms terms;
    const auto [lo, hi] = nu_range(m, l);
    for (std::int64_t nu = lo; nu <= hi; ++nu) {
        const QExp shift(prefactor(kind, m, l, nu));
        const std::int64_t k = m - l - nu;
        std::size_t len = static_cast<std::size_t>(detail::gaussian_degree(m, nu) + detail::gaussian_degree(nu, k) + 1);
        if (cutoff) {
            len = std::min(len, detail::length_below(shift, *cutoff));
        }
        if (len == 0) {
            continue;
        }
        const auto prod = detail::mul_trunc(detail::gaussian(m, nu, len), detail::gaussian(nu, k, len), len);
        detail::accumulate(terms, prod, shift, +1, cutoff);
    }
    return QSeries(std::move(terms), cutoff);
}

std::optional<std::int64_t> supernomial_min_exponent(SupernomialKind kind, std::int64_t m, std::int64_t l)
{
    const auto [lo, hi] = nu_range(m, l);
    std::optional<std::int64_t> best;
    for (std::int64_t nu = lo; nu <= hi; ++nu) {
        const std::int64_t e = prefactor(kind, m, l, nu);
        if (!best || e < *best) {
            best = e;
        }
    }
    return best;
}

SuiteReport verify_S_recurrences(int m_max, unsigned jobs, const SupernomialSource& source)
{
    const auto t0 = std::chrono::steady_clock::now();
    SupernomialSource src = source;
    if (!src) {
        src = [](SupernomialKind k, std::int64_t m, std::int64_t l) { return supernomial(k, m, l); };
    }
    SuiteReport rep;
    rep.suite = "recurrences";
    rep.identity = "S_{m,-l}=S_{m,l}, S~_{m,-l}=q^l S~_{m,l}, and the six three-term recurrences for "
                   "S_{m+1,l}, S~_{m+1,l}";
    rep.params = {{"m_max", m_max}};

    struct Case {
        int identity;
        std::int64_t m;
        std::int64_t l;
    };
    std::vector<Case> cases;
    for (std::int64_t m = 0; m < m_max; ++m) {
        for (std::int64_t l = -(m + 1); l <= m + 1; ++l) {
            for (int id = 0; id <= 6; ++id) {
                cases.push_back({id, m, l});
            }
        }
    }

    rep.cases = parallel_map<CaseResult>(cases.size(), jobs, [&](std::size_t i) {
        const auto [id, m, l] = cases[i];
        const auto P = [&](std::int64_t mm, std::int64_t ll) { return src(SupernomialKind::plain, mm, ll); };
        const auto T = [&](std::int64_t mm, std::int64_t ll) { return src(SupernomialKind::tilde, mm, ll); };
        const auto q = [](std::int64_t e) { return QExp(e); };
        QSeries lhs;
        QSeries rhs;
        switch (id) {
        case 0: {
            const auto plain = compare(P(m, -l), P(m, l));
            if (!plain.equal) {
                return fail_case("relS0 m=" + std::to_string(m) + " l=" + std::to_string(l),
                                 "S reflection fails at q^" + plain.first_mismatch->to_string());
            }
            lhs = T(m, -l);
            rhs = T(m, l).shifted(q(l));
            break;
        }
        case 1:
            lhs = P(m + 1, l);
            rhs = P(m, l + 1).shifted(q(-m - l - 1)) + P(m, l) + T(m, l - 1).shifted(q(-m + l - 1));
            break;
        case 2:
            lhs = P(m + 1, l);
            rhs = P(m, l + 1).shifted(q(-m - l - 1)) + T(m, l).shifted(q(-m)) + P(m, l - 1);
            break;
        case 3:
            lhs = P(m + 1, l);
            rhs = T(m, l + 1).shifted(q(-m)) + P(m, l) + P(m, l - 1).shifted(q(-m + l - 1));
            break;
        case 4:
            lhs = T(m + 1, l);
            rhs = P(m, l + 1).shifted(q(-l)) + P(m, l) + T(m, l - 1).shifted(q(-m + l - 1));
            break;
        case 5:
            lhs = T(m + 1, l);
            rhs = P(m, l + 1).shifted(q(-l)) + T(m, l).shifted(q(-m)) + P(m, l - 1);
            break;
        default:
            lhs = T(m + 1, l);
            rhs = T(m, l + 1).shifted(q(-m - l)) + P(m, l).shifted(q(-l)) + P(m, l - 1);
            break;
        }
        const auto cmp = compare(lhs, rhs);
        std::string id_str = "relS" + std::to_string(id) + " m=" + std::to_string(m) + " l=" + std::to_string(l);
        return check_case(std::move(id_str), cmp.equal,
                          cmp.equal ? "" : "first mismatch at q^" + cmp.first_mismatch->to_string());
    });
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::json supernomial_table(SupernomialKind kind, int m_max)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t m = 0; m <= m_max; ++m) {
        for (std::int64_t l = -m; l <= m; ++l) {
            rows.push_back({{"m", m},
                            {"l", l},
                            {"kind", kind == SupernomialKind::plain ? "S" : "S_tilde"},
                            {"series", to_json(supernomial(kind, m, l))}});
        }
    }
    return rows;
}

} // namespace qlab
