#include "qlab/config_sum.hpp"

#include <stdexcept>
#include <string>

#include "qlab/parallel.hpp"
#include "qlab/supernomial.hpp"
#include "qlab/weights.hpp"

namespace qlab {

std::vector<std::vector<QSeries>> config_sum_table(int a, std::int64_t m, const TauTable& tau)
{
    if (m < 0) {
        throw std::invalid_argument("config_sum_X: m must be >= 0");
    }
    const int pp = tau.p_prime();
    const std::size_t n = static_cast<std::size_t>(pp + 1);
    std::vector<std::vector<QSeries>> x(n, std::vector<QSeries>(n));
    if (a < 1 || a > pp - 1) {
        return x;
    }
    for (int c = a - 2; c <= a + 2; c += 2) {
        if (valid_step(a, c, pp)) {
            x[a][c] = QSeries::one();
        }
    }
    for (std::int64_t k = 0; k < m; ++k) {
        std::vector<std::vector<QSeries>> next(n, std::vector<QSeries>(n));
        for (int b = 1; b <= pp - 1; ++b) {
            for (int c = b - 2; c <= b + 2; c += 2) {
                if (!valid_step(b, c, pp)) {
                    continue;
                }
                QSeries acc;
                for (int d = b - 2; d <= b + 2; d += 2) {
                    if (valid_step(d, b, pp) && !x[d][b].empty()) {
                        acc += x[d][b].shifted(QExp(k + 1) * weight(d, b, c, tau));
                    }
                }
                next[b][c] = std::move(acc);
            }
        }
        x.swap(next);
    }
    return x;
}

QSeries config_sum_X(int a, int b, int c, std::int64_t m, const TauTable& tau)
{
    const int pp = tau.p_prime();
    if (!valid_step(b, c, pp) || a < 1 || a > pp - 1) {
        return QSeries();
    }
    return config_sum_table(a, m, tau)[b][c];
}

namespace {

QExp frac_over_t(std::int64_t s, const ModelParams& m) { return QExp(s * m.p(), m.p_prime()).frac(); }

} // namespace

QSeries f_function(std::int64_t a, int b, int c, std::int64_t m, const TauTable& tau)
{
    const int pp = tau.p_prime();
    if (b < 1 || b > pp - 1 || c < 1 || c > pp - 1 || (a - b) % 2 != 0) {
        return QSeries();
    }
    if (m < 0) {
        throw std::invalid_argument("f_function: m must be >= 0");
    }
    const std::int64_t l = (b - a) / 2;
    if (l > m || -l > m) {
        return QSeries();
    }
    const ModelParams& mp = tau.params();
    const QExp inv_t(mp.p(), mp.p_prime());
    const QExp base(m * m - l * l);
    if (c == b + 2) {
        const QExp e = QExp(l * (l + 1)) * inv_t + base + QExp(m - l) * frac_over_t(b + 1, mp);
        const QSeries s = tau.label(b + 2) == TauLabel::one_a ? S_tilde(m, l) : S(m, l);
        return s.shifted(e);
    }
    const QExp one_minus = QExp(1) - frac_over_t(b - 1, mp);
    if (c == b) {
        const QExp e = QExp(l * (l - 1)) * inv_t + base + QExp(l) * one_minus;
        if (tau.label(b) == TauLabel::two) {
            return S_tilde(m, l).shifted(e + QExp(l));
        }
        return S(m, l).shifted(e + QExp(m));
    }
    if (c == b - 2) {
        const QExp e = QExp(l * (l - 1)) * inv_t + base + QExp(m + l) * one_minus;
        if (tau.label(b - 2) == TauLabel::one_b) {
            return S_tilde(m, l).shifted(e + QExp(l));
        }
        return S(m, l).shifted(e);
    }
    return QSeries();
}

QSeries alternating_f_sum(int a, int b, int c, std::int64_t m, const TauTable& tau)
{
    const std::int64_t pp = tau.p_prime();
    QSeries sum;
    if ((a - b) % 2 != 0) {
        return sum;
    }
    // eps = +: l = (b-a)/2 - p'n; eps = -: l = (b+a)/2 + p'n. Keep |l| <= m.
    const std::int64_t lp = (b - a) / 2;
    for (std::int64_t n = QExp(lp - m, pp).ceil(); n <= QExp(lp + m, pp).floor(); ++n) {
        sum += f_function(a + 2 * pp * n, b, c, m, tau);
    }
    const std::int64_t lm = (b + a) / 2;
    for (std::int64_t n = QExp(-m - lm, pp).ceil(); n <= QExp(m - lm, pp).floor(); ++n) {
        sum -= f_function(-(a + 2 * pp * n), b, c, m, tau);
    }
    return sum;
}

SuiteReport verify_Xandf(const TauTable& tau, std::int64_t m_max, unsigned jobs)
{
    const ModelParams& mp = tau.params();
    const int pp = mp.p_prime();
    SuiteReport report;
    report.suite = "xandf";
    report.identity = "X_{a,b,c,m}(q) = sum_{eps=+-} eps sum_n f_{eps(a+2p'n),b,c,m}(q)";
    report.params = {{"p", mp.p()}, {"pp", pp}, {"m_max", m_max}};

    struct Job {
        int a;
        std::int64_t m;
    };
    std::vector<Job> jobs_list;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        for (int a = 1; a <= pp - 1; ++a) {
            jobs_list.push_back({a, m});
        }
    }
    auto per_job = parallel_map<std::vector<CaseResult>>(jobs_list.size(), jobs, [&](std::size_t i) {
        const auto [a, m] = jobs_list[i];
        const auto table = config_sum_table(a, m, tau);
        std::vector<CaseResult> out;
        for (int b = 1; b <= pp - 1; ++b) {
            if ((a - b) % 2 != 0) {
                continue;
            }
            for (int c = b - 2; c <= b + 2; c += 2) {
                if (!valid_step(b, c, pp)) {
                    continue;
                }
                const std::string id = "X a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                       " c=" + std::to_string(c) + " m=" + std::to_string(m);
                const QSeries rhs = alternating_f_sum(a, b, c, m, tau);
                const auto cmp = compare(table[b][c], rhs);
                if (cmp.equal) {
                    out.push_back(pass_case(id));
                } else {
                    out.push_back(fail_case(id, "first mismatch at q^" + cmp.first_mismatch->to_string() +
                                                    ": X=" + table[b][c].to_string() + " f-sum=" + rhs.to_string()));
                }
            }
        }
        return out;
    });
    for (auto& v : per_job) {
        for (auto& c : v) {
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

} // namespace qlab
