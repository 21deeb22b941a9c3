#include "qlab/fusion.hpp"

#include <stdexcept>
#include <string>

#include "qlab/detail/msum.hpp"
#include "qlab/model.hpp"
#include "qlab/parallel.hpp"
#include "qlab/qfunctions.hpp"
#include "qlab/supernomial.hpp"
#include "qlab/virasoro.hpp"

namespace qlab {

AffineLevelData::AffineLevelData(int k, int l) : k_(k), l_(l)
{
    if (k < 1 || l < 0 || l > k) {
        throw std::invalid_argument("AffineLevelData: need k >= 1 and 0 <= l <= k");
    }
}

QExp AffineLevelData::conformal_weight() const { return affine_conformal_weight(l_, k_); }

QExp affine_conformal_weight(int l, int k) { return QExp(static_cast<std::int64_t>(l) * (l + 2), 4 * (k + 2)); }

QZChar ch_pi1_fused(std::int64_t m)
{
    if (m < 0) {
        throw std::invalid_argument("ch_pi1_fused: m must be >= 0");
    }
    QZChar out;
    for (std::int64_t l = -m; l <= m; l += 2) {
        out.add_to(l, q_binomial(m, (m + l) / 2));
    }
    return out;
}

QZChar ch_pi2_fused(std::int64_t m)
{
    if (m < 0) {
        throw std::invalid_argument("ch_pi2_fused: m must be >= 0");
    }
    QZChar out;
    for (std::int64_t l = -m; l <= m; ++l) {
        out.add_to(2 * l, S(m, l).flipped());
    }
    return out;
}

QZChar ch_mixed_fused(std::int64_t L1, std::int64_t L2)
{
    QZChar out;
    // weights 2a with a in Z + L1/2, |a| <= L1/2 + L2
    for (std::int64_t alpha = -(L1 + 2 * L2); alpha <= L1 + 2 * L2; alpha += 2) {
        out.add_to(alpha, supernomial2(L1, L2, QExp(alpha, 2)));
    }
    return out;
}

QZChar ch_mixed_fused_closed(std::int64_t L1, std::int64_t L2)
{
    if (L1 < 0 || L1 % 2 != 0 || L2 < 0) {
        throw std::invalid_argument("ch_mixed_fused_closed: need even L1 >= 0 and L2 >= 0");
    }
    const std::int64_t k = L1 / 2;
    QZChar out;
    for (std::int64_t m = 0; m <= k; ++m) {
        out += ch_pi2_fused(L2 + m).times(q_binomial(k, m).shifted(QExp((k - m) * (k + L2))));
    }
    return out;
}

namespace {

std::string char_mismatch(const CharComparison& c)
{
    return "first mismatch at z^" + std::to_string(*c.first_alpha) + " q^" + c.first_mismatch->to_string();
}

Coeff power(long base, std::int64_t e)
{
    Coeff out = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

} // namespace

SuiteReport verify_exact_sequence_chars(std::int64_t k1_max, std::int64_t k2_max)
{
    SuiteReport report;
    report.suite = "exactseq";
    report.identity = "ch pi1^{*2k1}*pi2^{*k2} = ch pi1^{*2(k1-1)}*pi2^{*(k2+1)} + q^{2k1+k2-1} ch pi1^{*2(k1-1)}*pi2^{*k2}";
    report.params = {{"k1_max", k1_max}, {"k2_max", k2_max}};
    for (std::int64_t k1 = 1; k1 <= k1_max; ++k1) {
        for (std::int64_t k2 = 0; k2 <= k2_max; ++k2) {
            const std::string suffix = " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
            const QZChar lhs = ch_mixed_fused(2 * k1, k2);
            const QZChar rhs = ch_mixed_fused(2 * k1 - 2, k2 + 1) +
                               ch_mixed_fused(2 * k1 - 2, k2).times(QSeries::monomial(QExp(2 * k1 + k2 - 1)));
            const auto c1 = compare(lhs, rhs);
            report.cases.push_back(check_case("sequence" + suffix, c1.equal, c1.equal ? "" : char_mismatch(c1)));
            const auto c2 = compare(lhs, ch_mixed_fused_closed(2 * k1, k2));
            report.cases.push_back(check_case("closed form" + suffix, c2.equal, c2.equal ? "" : char_mismatch(c2)));
            const Coeff dim = lhs.eval_at_one();
            const Coeff expect = power(2, 2 * k1) * power(3, k2);
            report.cases.push_back(check_case("dimension" + suffix, dim == expect && rhs.eval_at_one() == expect,
                                              "dim " + dim.get_str() + ", expected " + expect.get_str()));
        }
    }
    return report;
}

QZChar level1_char(int i, const QExp& cutoff)
{
    if (i != 0 && i != 1) {
        throw std::invalid_argument("level1_char: i must be 0 or 1");
    }
    const QSeries inv = poch_inv(std::nullopt, cutoff);
    QZChar out;
    // exponent (n + i/2)^2 - i/4 = n^2 + n i
    if (auto w = quadratic_window(QExp(1), QExp(i), QExp(0), cutoff)) {
        for (std::int64_t n = w->first; n <= w->second; ++n) {
            out.add_to(2 * n + i, inv.shifted(QExp(n * n + n * i)).truncated(cutoff));
        }
    }
    return out;
}

QZChar pi2_series(const QExp& cutoff, std::int64_t l_max, bool with_prefactor)
{
    QZChar out;
    for (std::int64_t l = -l_max; l <= l_max; ++l) {
        const std::int64_t al = l < 0 ? -l : l;
        auto shift = [&](std::int64_t m) { return with_prefactor ? m * m : 0; };
        auto bound = [&](std::int64_t m) -> std::optional<QExp> {
            const auto e = supernomial_min_exponent(SupernomialKind::plain, m, l);
            if (!e) {
                return std::nullopt;
            }
            return QExp(shift(m) + *e);
        };
        auto term = [&](std::int64_t m) {
            // z^{2l} component of ch_{q^{-1},z} pi_2^{*m}
            const QSeries comp = ch_pi2_fused(m).flipped().component(2 * l);
            const QExp lb = *bound(m);
            const QExp inner = lb < QExp(0) ? cutoff - lb : cutoff;
            return comp.shifted(QExp(shift(m))) * poch_inv(m, inner);
        };
        // without the prefactor the series need not converge; the cap keeps it finite
        const std::int64_t cap = with_prefactor ? cutoff.ceil() + al + 2 : al + 8;
        auto sum = detail::sum_over_m(al, cap, cutoff, bound, term);
        out.add_to(2 * l, sum.sum);
    }
    return out;
}

SuiteReport verify_pi2pi3(const QExp& cutoff)
{
    SuiteReport report;
    report.suite = "pi2pi3";
    report.identity = "ch_{q,z} L_{0,1} = sum_{m>=0} q^{m^2}/(q)_m ch_{q^{-1},z} pi_2^{*m}";
    report.params = {{"cutoff", cutoff.to_string()}};
    const QZChar lhs = level1_char(0, cutoff);
    // weights beyond |alpha| = 2 l_max contribute only at q^{l^2} >= cutoff on both sides
    std::int64_t l_max = 0;
    while (QExp(l_max * l_max) < cutoff) {
        ++l_max;
    }
    const QZChar rhs = pi2_series(cutoff, l_max + 1);
    for (std::int64_t l = -(l_max + 1); l <= l_max + 1; ++l) {
        QSeries a = lhs.component(2 * l);
        QSeries b = rhs.component(2 * l);
        a = a.is_exact() ? a.truncated(cutoff) : a;
        b = b.is_exact() ? b.truncated(cutoff) : b;
        const auto cmp = compare(a, b);
        report.cases.push_back(check_case("alpha=" + std::to_string(2 * l), cmp.equal && cmp.verified_below &&
                                                                                  !(*cmp.verified_below < cutoff),
                                          cmp.equal ? "" : "first mismatch at q^" + cmp.first_mismatch->to_string()));
    }
    return report;
}

SuiteReport verify_pmn(std::int64_t N_max)
{
    SuiteReport report;
    report.suite = "pmn";
    report.identity = "q^{N^2} ch_{q^{-1},z} pi_1^{*2N} = sum_{m=0}^{N} q^{m^2} [N,m]_q ch_{q^{-1},z} pi_2^{*m}";
    report.params = {{"N_max", N_max}};
    for (std::int64_t N = 0; N <= N_max; ++N) {
        const QZChar lhs = ch_pi1_fused(2 * N).flipped().times(QSeries::monomial(QExp(N * N)));
        QZChar rhs;
        for (std::int64_t m = 0; m <= N; ++m) {
            rhs += ch_pi2_fused(m).flipped().times(q_binomial(N, m).shifted(QExp(m * m)));
        }
        const auto cmp = compare(lhs, rhs);
        report.cases.push_back(check_case("N=" + std::to_string(N), cmp.equal, cmp.equal ? "" : char_mismatch(cmp)));
    }
    return report;
}

QSeries euler_multiplicity(const QZChar& V, int k, int l, std::optional<QExp> cutoff)
{
    if (l < 0 || l > k) {
        throw std::invalid_argument("euler_multiplicity: need 0 <= l <= k");
    }
    const std::int64_t period = 2 * (k + 2);
    QSeries out = cutoff ? QSeries::zero(*cutoff) : QSeries();
    auto prefactor = [&](std::int64_t lam) { return QExp(-(k + 2) * lam * lam + (l + 1) * lam); };
    for (const auto& [alpha, comp] : V.components()) {
        if ((alpha + l) % period == 0) {
            const std::int64_t lam = (alpha + l) / period;
            out += comp.shifted(prefactor(lam));
        }
        if ((alpha + l + 2) % period == 0) {
            const std::int64_t lam = (alpha + l + 2) / period;
            out -= comp.shifted(prefactor(lam));
        }
    }
    return cutoff ? out.truncated(*cutoff) : out;
}

QSeries abf_finitized(std::int64_t N, int k, int j, int l)
{
    if (N < 0 || j < 0 || j > k || l < 0 || l > k + 1 || (j - l) % 2 != 0) {
        throw std::invalid_argument("abf_finitized: need N >= 0, 0 <= j <= k, 0 <= l <= k+1, j = l (mod 2)");
    }
    const std::int64_t A = static_cast<std::int64_t>(k + 2) * (k + 3);
    const std::int64_t K = k + 3;
    QSeries sum;
    // [2N, x] vanishes unless 0 <= x <= 2N
    const std::int64_t x1 = (2 * N - l + j) / 2;
    for (std::int64_t lam = QExp(-x1, K).ceil(); lam <= QExp(2 * N - x1, K).floor(); ++lam) {
        const std::int64_t e = A * lam * lam + (K * (j + 1) - (k + 2) * (l + 1)) * lam;
        sum += q_binomial(2 * N, x1 + K * lam).shifted(QExp(e));
    }
    const std::int64_t x2 = (2 * N - l - j - 2) / 2;
    for (std::int64_t lam = QExp(-x2, K).ceil(); lam <= QExp(2 * N - x2, K).floor(); ++lam) {
        const std::int64_t e = A * lam * lam - (K * (j + 1) + (k + 2) * (l + 1)) * lam + (j + 1) * (l + 1);
        sum -= q_binomial(2 * N, x2 + K * lam).shifted(QExp(e));
    }
    return sum.shifted(QExp(static_cast<std::int64_t>(l - j) * (l - j), 4));
}

SuiteReport verify_abf(std::int64_t N, int k, std::int64_t degree)
{
    SuiteReport report;
    report.suite = "abf";
    report.identity = "finitized character at size N = q^{Delta(l,k+1) - Delta(j,k)} chi_{j+1,l+1} in low degrees";
    report.params = {{"N", N}, {"k", k}, {"degree", degree}};
    const ModelParams mp(k + 2, k + 3);
    const ConformalData cd(mp);
    for (int j = 0; j <= k; ++j) {
        for (int l = j % 2; l <= k + 1; l += 2) {
            const QExp shift = affine_conformal_weight(l, k + 1) - affine_conformal_weight(j, k) + cd.delta(j + 1, l + 1);
            const QExp lead(static_cast<std::int64_t>(l - j) * (l - j), 4);
            const QExp rel_cut(degree + 1);
            const QSeries chi = rocha_caridi(mp, j + 1, l + 1, rel_cut).shifted(shift);
            const QSeries fin = abf_finitized(N, k, j, l).truncated(lead + rel_cut);
            const auto cmp = compare(fin, chi);
            const std::string id = "abf j=" + std::to_string(j) + " l=" + std::to_string(l);
            if (shift != lead) {
                report.cases.push_back(fail_case(id, "prefactor mismatch: " + shift.to_string() + " vs " + lead.to_string()));
                continue;
            }
            report.cases.push_back(check_case(id, cmp.equal,
                                              cmp.equal ? "" : "first mismatch at q^" + cmp.first_mismatch->to_string()));
        }
    }
    return report;
}

namespace {

void check_unitary_labels(int k, int r, int s)
{
    if (k < 1 || r < 1 || r > k + 1 || s < 1 || s > k + 2) {
        throw std::invalid_argument("graded_13_char: need k >= 1, 1 <= r <= k+1, 1 <= s <= k+2");
    }
}

int sector(int r, int s) { return ((r - s) % 2 + 2) % 2; }

} // namespace

QSeries graded_13_numerator(int k, int r, int s, std::int64_t m)
{
    check_unitary_labels(k, r, s);
    const ModelParams mp(k + 2, k + 3);
    const ConformalData cd(mp);
    return I_m(mp, r, s, r + sector(r, s), m).shifted(cd.delta(r, s));
}

QSeries graded_13_char(int k, int r, int s, std::int64_t m, const QExp& cutoff)
{
    check_unitary_labels(k, r, s);
    const ModelParams mp(k + 2, k + 3);
    const ConformalData cd(mp);
    const QExp delta = cd.delta(r, s);
    const QSeries num = I_m(mp, r, s, r + sector(r, s), m, cutoff);
    QExp inner = cutoff;
    if (auto f = num.floor(); f && *f < QExp(0)) {
        inner = cutoff - *f;
    }
    return (num * poch_inv(m, inner)).truncated(cutoff).shifted(delta);
}

QSeries graded_13_numerator_euler(int k, int r, int s, std::int64_t m)
{
    check_unitary_labels(k, r, s);
    if (sector(r, s) == 1) {
        r = k + 2 - r;
        s = k + 3 - s;
    }
    const int j = r - 1;
    const int l = s - 1;
    const QZChar V = ch_pi2_fused(m).flipped().tensor_irrep(j);
    const QExp shift = affine_conformal_weight(j, k) - affine_conformal_weight(l, k + 1) + QExp(m * m);
    return euler_multiplicity(V, k + 1, l).shifted(shift);
}

SuiteReport verify_i1_sector(int k, std::int64_t m_max)
{
    SuiteReport report;
    report.suite = "i1sector";
    report.identity = "graded (1,3) character of sector (j+1,l+1), l != j mod 2, equals that of (k-j+1,k-l+2)";
    report.params = {{"k", k}, {"m_max", m_max}};
    for (int j = 0; j <= k; ++j) {
        for (int l = 0; l <= k + 1; ++l) {
            if ((l - j) % 2 == 0) {
                continue;
            }
            for (std::int64_t m = 0; m <= m_max; ++m) {
                const QSeries a = graded_13_numerator(k, j + 1, l + 1, m);
                const QSeries b = graded_13_numerator(k, k - j + 1, k - l + 2, m);
                const auto cmp = compare(a, b);
                report.cases.push_back(check_case("j=" + std::to_string(j) + " l=" + std::to_string(l) +
                                                      " m=" + std::to_string(m),
                                                  cmp.equal, cmp.equal ? "" : a.to_string() + " vs " + b.to_string()));
            }
        }
    }
    return report;
}

SuiteReport verify_grading(int k, std::int64_t m_max, const QExp& cutoff, unsigned jobs)
{
    SuiteReport report;
    report.suite = "grading";
    report.identity = "ch Gr_m M(k+2,k+3)_{r,s} = q^{Delta_{r,s}}/(q)_m I_{r,s,r+i,m}: nonnegative, sums to chi_{r,s}, "
                      "equals the Euler-Poincare form";
    report.params = {{"k", k}, {"m_max", m_max}, {"cutoff", cutoff.to_string()}};
    const ModelParams mp(k + 2, k + 3);
    const ConformalData cd(mp);
    struct Job {
        int r, s;
    };
    std::vector<Job> list;
    for (int r = 1; r <= k + 1; ++r) {
        for (int s = 1; s <= k + 2; ++s) {
            list.push_back({r, s});
        }
    }
    auto per = parallel_map<std::vector<CaseResult>>(list.size(), jobs, [&](std::size_t i) {
        const auto [r, s] = list[i];
        const std::string tag = "r=" + std::to_string(r) + " s=" + std::to_string(s);
        std::vector<CaseResult> out;
        bool nonneg = true;
        bool routes = true;
        std::string detail;
        for (std::int64_t m = 0; m <= m_max; ++m) {
            const QSeries num = graded_13_numerator(k, r, s, m);
            if (!nonnegative(num) || !nonnegative(graded_13_char(k, r, s, m, cutoff))) {
                nonneg = false;
                detail = "negative coefficient at m=" + std::to_string(m);
            }
            if (!compare(num, graded_13_numerator_euler(k, r, s, m)).equal) {
                routes = false;
            }
        }
        out.push_back(check_case("nonnegative " + tag, nonneg, detail));
        out.push_back(check_case("routes agree " + tag, routes, routes ? "" : "Euler-Poincare form differs"));

        const QExp delta = cd.delta(r, s);
        const int b = r + sector(r, s);
        const auto sum = detail::sum_over_m(
            0, cutoff.ceil() + 2, cutoff,
            [&](std::int64_t m) { return I_m_min_exponent(mp, r, s, b, m); },
            [&](std::int64_t m) { return graded_13_char(k, r, s, m, cutoff).shifted(-delta); });
        const auto cmp = compare(sum.sum, rocha_caridi(mp, r, s, cutoff));
        out.push_back(check_case("sum over m " + tag, cmp.equal && !sum.cap_hit,
                                 cmp.equal ? "m summed to " + std::to_string(sum.last_m)
                                           : "first mismatch at q^" + cmp.first_mismatch->to_string()));
        return out;
    });
    for (auto& v : per) {
        for (auto& c : v) {
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

} // namespace qlab
