#include "qlab/virasoro.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "qlab/config_sum.hpp"
#include "qlab/detail/msum.hpp"
#include "qlab/parallel.hpp"
#include "qlab/paths.hpp"
#include "qlab/qfunctions.hpp"
#include "qlab/supernomial.hpp"
#include "qlab/weights.hpp"

namespace qlab {

std::optional<std::pair<std::int64_t, std::int64_t>> quadratic_window(const QExp& A, const QExp& B, const QExp& C,
                                                                      const QExp& bound)
{
    if (!(QExp(0) < A)) {
        throw std::invalid_argument("quadratic_window: leading coefficient must be positive");
    }
    auto value = [&](std::int64_t x) { return A * QExp(x) * QExp(x) + B * QExp(x) + C; };
    const std::int64_t x0 = (-B / (A * QExp(2))).floor();
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;
    for (std::int64_t x = x0; value(x) < bound; --x) {
        lo = x;
        if (!hi) {
            hi = x;
        }
    }
    for (std::int64_t x = x0 + 1; value(x) < bound; ++x) {
        hi = x;
        if (!lo) {
            lo = x;
        }
    }
    if (!lo) {
        return std::nullopt;
    }
    return std::make_pair(*lo, *hi);
}

QSeries rocha_caridi(const ModelParams& params, int r, int s, const QExp& cutoff)
{
    const std::int64_t p = params.p();
    const std::int64_t pp = params.p_prime();
    if (r < 1 || r > p - 1 || s < 1 || s > pp - 1) {
        throw std::invalid_argument("rocha_caridi: (r, s) outside the Kac table");
    }
    QSeries::Terms num;
    const QExp A(p * pp);
    if (auto w = quadratic_window(A, QExp(pp * r - p * s), QExp(0), cutoff)) {
        for (std::int64_t l = w->first; l <= w->second; ++l) {
            num[QExp(l * l * p * pp + l * (pp * r - p * s))] += 1;
        }
    }
    if (auto w = quadratic_window(A, QExp(pp * r + p * s), QExp(r * s), cutoff)) {
        for (std::int64_t l = w->first; l <= w->second; ++l) {
            num[QExp(l * l * p * pp + l * (pp * r + p * s) + r * s)] -= 1;
        }
    }
    return (QSeries(std::move(num), cutoff) * poch_inv(std::nullopt, cutoff)).truncated(cutoff);
}

namespace {

struct ImTerm {
    QExp prefactor;
    std::int64_t l;
    int sign;
};

std::vector<ImTerm> I_m_terms(const ModelParams& params, int r, int a, int b, std::int64_t m)
{
    if ((a - b) % 2 != 0) {
        throw std::invalid_argument("I_m: a and b must have equal parity");
    }
    if (m < 0) {
        throw std::invalid_argument("I_m: m must be >= 0");
    }
    const std::int64_t p = params.p();
    const std::int64_t pp = params.p_prime();
    std::vector<ImTerm> out;
    const std::int64_t d1 = (a - b) / 2;
    for (std::int64_t lam = QExp(d1 - m, pp).ceil(); lam <= QExp(d1 + m, pp).floor(); ++lam) {
        const std::int64_t l = d1 - pp * lam;
        out.push_back({QExp(lam * lam * p * pp + lam * (pp * r - p * a) + m * m - l * l), l, +1});
    }
    const std::int64_t d2 = (a + b) / 2;
    for (std::int64_t lam = QExp(-m - d2, pp).ceil(); lam <= QExp(m - d2, pp).floor(); ++lam) {
        const std::int64_t l = d2 + pp * lam;
        out.push_back({QExp(lam * lam * p * pp + lam * (pp * r + p * a) + r * a + m * m - l * l), l, -1});
    }
    return out;
}

} // namespace

QSeries I_m(const ModelParams& params, int r, int a, int b, std::int64_t m, std::optional<QExp> cutoff)
{
    QSeries sum = cutoff ? QSeries::zero(*cutoff) : QSeries();
    for (const auto& t : I_m_terms(params, r, a, b, m)) {
        std::optional<QExp> inner;
        if (cutoff) {
            inner = *cutoff - t.prefactor;
        }
        QSeries s = S(m, t.l, inner).shifted(t.prefactor);
        if (t.sign > 0) {
            sum += s;
        } else {
            sum -= s;
        }
    }
    return sum;
}

std::optional<QExp> I_m_min_exponent(const ModelParams& params, int r, int a, int b, std::int64_t m)
{
    std::optional<QExp> best;
    for (const auto& t : I_m_terms(params, r, a, b, m)) {
        if (auto e = supernomial_min_exponent(SupernomialKind::plain, m, t.l)) {
            const QExp v = t.prefactor + QExp(*e);
            if (!best || v < *best) {
                best = v;
            }
        }
    }
    return best;
}

namespace {

std::string rocha2_id(const Rocha2Instance& inst)
{
    return "rocha2 p=" + std::to_string(inst.params.p()) + " pp=" + std::to_string(inst.params.p_prime()) +
           " r=" + std::to_string(inst.r) + " a=" + std::to_string(inst.a) + " b=" + std::to_string(inst.b);
}

} // namespace

CaseResult check_rocha2(const Rocha2Instance& inst, const QExp& cutoff)
{
    const std::string id = rocha2_id(inst);
    const QSeries lhs = rocha_caridi(inst.params, inst.r, inst.a, cutoff);
    const auto sum = detail::sum_over_m(
        0, cutoff.ceil() + 2, cutoff,
        [&](std::int64_t m) { return I_m_min_exponent(inst.params, inst.r, inst.a, inst.b, m); },
        [&](std::int64_t m) {
            const QExp lb = *I_m_min_exponent(inst.params, inst.r, inst.a, inst.b, m);
            const QExp inner = lb < QExp(0) ? cutoff - lb : cutoff;
            return I_m(inst.params, inst.r, inst.a, inst.b, m, cutoff) * poch_inv(m, inner);
        });
    const auto cmp = compare(lhs, sum.sum);
    std::string detail = "m summed to " + std::to_string(sum.last_m);
    if (sum.cap_hit) {
        detail += "; hard cap on m reached";
    }
    if (!cmp.equal) {
        return fail_case(id, detail + "; first mismatch at q^" + cmp.first_mismatch->to_string());
    }
    if (!cmp.verified_below || *cmp.verified_below < cutoff) {
        return fail_case(id, detail + "; compared range shorter than the cutoff");
    }
    return pass_case(id, detail);
}

SuiteReport verify_rocha2(const std::vector<Rocha2Instance>& instances, const QExp& cutoff, unsigned jobs)
{
    SuiteReport report;
    report.suite = "rocha2";
    report.identity = "q^{-Delta_{r,a}} chi_{r,a}(q) = sum_{m>=0} I_{r,a,b,m}(q)/(q)_m for any b = a (mod 2)";
    report.params = {{"cutoff", cutoff.to_string()}, {"instances", instances.size()}};
    report.cases = parallel_map<CaseResult>(instances.size(), jobs,
                                            [&](std::size_t i) { return check_rocha2(instances[i], cutoff); });
    return report;
}

std::vector<Rocha2Instance> default_rocha2_instances()
{
    std::vector<Rocha2Instance> out;
    auto add_model = [&](int p, int pp, std::initializer_list<std::array<int, 2>> ras, bool non_minimal) {
        const ModelParams mp(p, pp);
        const ConformalData cd(mp);
        for (const auto& ra : ras) {
            const int r = ra[0];
            const int a = ra[1];
            const int b = b_of(r, a, cd);
            out.push_back({mp, r, a, b});
            if (non_minimal) {
                // first other site of the same parity
                for (int b2 = (a % 2 == 0) ? 2 : 1; b2 <= pp - 1; b2 += 2) {
                    if (b2 != b) {
                        out.push_back({mp, r, a, b2});
                        break;
                    }
                }
            }
        }
    };
    add_model(3, 4, {{1, 1}, {1, 2}, {1, 3}, {2, 1}}, true);
    add_model(4, 5, {{1, 1}, {2, 3}, {3, 2}}, true);
    add_model(5, 7, {{2, 3}, {1, 4}}, true);
    add_model(4, 7, {{1, 2}, {3, 5}}, true);
    add_model(5, 8, {{2, 5}}, true);
    return out;
}

QSeries path_side_GEN(const TauTable& tau, int r, int a, int b, std::int64_t m)
{
    const ModelParams& mp = tau.params();
    const ConformalData cd(mp);
    if (b != b_of(r, a, cd)) {
        throw std::invalid_argument("path_side_GEN: b must equal b(r, a)");
    }
    QSeries::Terms terms;
    for (const Path& path : enumerate_paths(a, b, m, mp)) {
        QExp e = cd.delta(r, b) - cd.delta(r, a);
        if (m >= 1) {
            const int prev = path.sites[static_cast<std::size_t>(m - 1)];
            e += energy(path, tau) +
                 QExp(m) * (cd.delta(r, prev) - cd.delta(r, b) + QExp(prev == b ? 1 : 0));
        }
        terms[e] += 1;
    }
    return QSeries(std::move(terms));
}

SuiteReport verify_GEN(const TauTable& tau, std::int64_t m_max, unsigned jobs)
{
    const ModelParams& mp = tau.params();
    const ConformalData cd(mp);
    SuiteReport report;
    report.suite = "gen";
    report.identity = "sum over paths P_{a,b,m} of q^{E(s) + m(Delta(r,s_{m-1}) - Delta(r,b) + delta) + "
                      "Delta(r,b) - Delta(r,a)} = I_{r,a,b,m}(q), b = b(r,a)";
    report.params = {{"p", mp.p()}, {"pp", mp.p_prime()}, {"m_max", m_max}};
    struct Job {
        int r, a;
        std::int64_t m;
    };
    std::vector<Job> list;
    for (int r = 1; r <= mp.p() - 1; ++r) {
        for (int a = 1; a <= mp.p_prime() - 1; ++a) {
            for (std::int64_t m = 0; m <= m_max; ++m) {
                list.push_back({r, a, m});
            }
        }
    }
    report.cases = parallel_map<CaseResult>(list.size(), jobs, [&](std::size_t i) {
        const auto [r, a, m] = list[i];
        const int b = b_of(r, a, cd);
        const std::string id = "GEN r=" + std::to_string(r) + " a=" + std::to_string(a) + " b=" +
                               std::to_string(b) + " m=" + std::to_string(m);
        const QSeries lhs = path_side_GEN(tau, r, a, b, m);
        for (const auto& kv : lhs.terms()) {
            if (!kv.first.is_integer()) {
                return fail_case(id, "non-integral exponent " + kv.first.to_string());
            }
        }
        const QSeries rhs = I_m(mp, r, a, b, m);
        const auto cmp = compare(lhs, rhs);
        return check_case(id, cmp.equal,
                          cmp.equal ? std::string() : "paths=" + lhs.to_string() + " I_m=" + rhs.to_string());
    });
    return report;
}

SuiteReport verify_IandS(const TauTable& tau, std::int64_t m_max, unsigned jobs)
{
    const ModelParams& mp = tau.params();
    const ConformalData cd(mp);
    const int pp = mp.p_prime();
    SuiteReport report;
    report.suite = "iands";
    report.identity = "I_{r,a,b,m}(q) = sum_{d=b,b+-2} q^{m(Delta(r,d) - Delta(r,b) + delta_{d,b}) + Delta(r,b) - "
                      "Delta(r,a)} X_{a,d,b,m-1}(q)";
    report.params = {{"p", mp.p()}, {"pp", pp}, {"m_max", m_max}};
    struct Job {
        int r, a;
        std::int64_t m;
    };
    std::vector<Job> list;
    for (int r = 1; r <= mp.p() - 1; ++r) {
        for (int a = 1; a <= pp - 1; ++a) {
            for (std::int64_t m = 1; m <= m_max; ++m) {
                list.push_back({r, a, m});
            }
        }
    }
    auto per = parallel_map<std::vector<CaseResult>>(list.size(), jobs, [&](std::size_t i) {
        const auto [r, a, m] = list[i];
        const auto x = config_sum_table(a, m - 1, tau);
        std::vector<CaseResult> out;
        {
            const int b = b_of(r, a, cd);
            QSeries rhs;
            for (int d = b - 2; d <= b + 2; d += 2) {
                if (!valid_step(d, b, pp)) {
                    continue;
                }
                const QExp e = QExp(m) * (cd.delta(r, d) - cd.delta(r, b) + QExp(d == b ? 1 : 0)) +
                               cd.delta(r, b) - cd.delta(r, a);
                rhs += x[d][b].shifted(e);
            }
            const QSeries lhs = I_m(mp, r, a, b, m);
            const auto cmp = compare(lhs, rhs);
            const std::string id = "IandS r=" + std::to_string(r) + " a=" + std::to_string(a) + " b=" +
                                   std::to_string(b) + " m=" + std::to_string(m);
            out.push_back(check_case(id, cmp.equal,
                                     cmp.equal ? std::string() : "I_m=" + lhs.to_string() + " X-side=" + rhs.to_string()));
        }
        return out;
    });
    for (auto& v : per) {
        for (auto& c : v) {
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

namespace {

using MinTable = std::vector<std::vector<std::optional<QExp>>>;

// min over paths s_0 = a, ..., s_j = d, s_{j+1} = c of sum_{u=1}^{j} u w(s_{u-1}, s_u, s_{u+1}).
class MinEnergy {
public:
    MinEnergy(const TauTable& tau, int a) : tau_(tau)
    {
        const int pp = tau.p_prime();
        MinTable t0(static_cast<std::size_t>(pp + 1), std::vector<std::optional<QExp>>(static_cast<std::size_t>(pp + 1)));
        for (int c = a - 2; c <= a + 2; c += 2) {
            if (valid_step(a, c, pp)) {
                t0[a][c] = QExp(0);
            }
        }
        tables_.push_back(std::move(t0));
    }

    const std::optional<QExp>& at(std::int64_t j, int d, int c)
    {
        while (static_cast<std::int64_t>(tables_.size()) <= j) {
            extend();
        }
        return tables_[static_cast<std::size_t>(j)][d][c];
    }

private:
    void extend()
    {
        const int pp = tau_.p_prime();
        const MinTable& prev = tables_.back();
        const QExp j1(static_cast<std::int64_t>(tables_.size()));
        MinTable next(prev.size(), std::vector<std::optional<QExp>>(prev.size()));
        for (int b = 1; b <= pp - 1; ++b) {
            for (int c = b - 2; c <= b + 2; c += 2) {
                if (!valid_step(b, c, pp)) {
                    continue;
                }
                for (int d = b - 2; d <= b + 2; d += 2) {
                    if (!valid_step(d, b, pp) || !prev[d][b]) {
                        continue;
                    }
                    const QExp v = *prev[d][b] + j1 * weight(d, b, c, tau_);
                    if (!next[b][c] || v < *next[b][c]) {
                        next[b][c] = v;
                    }
                }
            }
        }
        tables_.push_back(std::move(next));
    }

    const TauTable& tau_;
    std::vector<MinTable> tables_;
};

} // namespace

QSeries rigged_path_gf(const TauTable& tau, int r, int a, const QExp& cutoff)
{
    const ModelParams& mp = tau.params();
    const ConformalData cd(mp);
    const int pp = mp.p_prime();
    const int b = b_of(r, a, cd);
    const QExp limit = cd.delta(r, a) + cutoff;
    const QExp base = cd.delta(r, b);
    MinEnergy min_energy(tau, a);
    QSeries::Terms terms;
    if (a == b && base < limit) {
        terms[base] += 1;
    }

    auto boundary = [&](int d) { return cd.delta(r, d) - cd.delta(r, b) + QExp(d == b ? 1 : 0); };

    std::vector<int> sites;  // sites[i] = s_i
    auto dfs = [&](auto& self, std::int64_t i, const QExp& tail, const std::optional<QExp>& n_next) -> void {
        const int si = sites[static_cast<std::size_t>(i)];
        for (int d = si - 2; d <= si + 2; d += 2) {
            if (!valid_step(d, si, pp)) {
                continue;
            }
            const auto& me = min_energy.at(i - 1, d, si);
            if (!me) {
                continue;
            }
            const QExp offset = cd.delta(r, d) - cd.delta(r, si);
            QExp lower = n_next ? *n_next + weight(d, si, sites[static_cast<std::size_t>(i + 1)], tau) : boundary(d);
            for (QExp n = ceil_to_coset(lower, offset);; n += QExp(1)) {
                const QExp bound = base + tail + n * QExp(i) + *me;
                if (!(bound < limit)) {
                    break;
                }
                if (i == 1) {
                    terms[base + tail + n] += 1;
                    continue;
                }
                sites[static_cast<std::size_t>(i - 1)] = d;
                self(self, i - 1, tail + n, n);
            }
        }
    };

    const std::int64_t m_cap = 4 * cutoff.ceil() + 8;
    int idle = 0;
    for (std::int64_t m = 1; idle < 3 && m <= m_cap; ++m) {
        std::optional<QExp> least;
        for (int d = b - 2; d <= b + 2; d += 2) {
            if (!valid_step(d, b, pp)) {
                continue;
            }
            if (const auto& me = min_energy.at(m - 1, d, b)) {
                const QExp v = base + QExp(m) * boundary(d) + *me;
                if (!least || v < *least) {
                    least = v;
                }
            }
        }
        if (!least || !(*least < limit)) {
            ++idle;
            continue;
        }
        idle = 0;
        sites.assign(static_cast<std::size_t>(m + 1), 0);
        sites[static_cast<std::size_t>(m)] = b;
        dfs(dfs, m, QExp(0), std::nullopt);
    }
    return QSeries(std::move(terms), limit);
}

SuiteReport verify_rigged(const TauTable& tau, const QExp& cutoff, unsigned jobs)
{
    const ModelParams& mp = tau.params();
    const ConformalData cd(mp);
    SuiteReport report;
    report.suite = "rigged";
    report.identity = "sum over admissible rigged paths of q^{Delta(r,b) + sum n_i} = chi_{r,a}(q)";
    report.params = {{"p", mp.p()}, {"pp", mp.p_prime()}, {"cutoff", cutoff.to_string()}};
    struct Job {
        int r, a;
    };
    std::vector<Job> list;
    for (int r = 1; r <= mp.p() - 1; ++r) {
        for (int a = 1; a <= mp.p_prime() - 1; ++a) {
            list.push_back({r, a});
        }
    }
    report.cases = parallel_map<CaseResult>(list.size(), jobs, [&](std::size_t i) {
        const auto [r, a] = list[i];
        const std::string id = "rigged r=" + std::to_string(r) + " a=" + std::to_string(a);
        const QSeries gf = rigged_path_gf(tau, r, a, cutoff);
        const QSeries rc = rocha_caridi(mp, r, a, cutoff).shifted(cd.delta(r, a));
        const auto cmp = compare(gf, rc);
        return check_case(id, cmp.equal,
                          cmp.equal ? std::string() : "first mismatch at q^" + cmp.first_mismatch->to_string());
    });
    return report;
}

SuiteReport verify_expansion_identity(std::int64_t l_max, const QExp& cutoff)
{
    SuiteReport report;
    report.suite = "expansion";
    report.identity = "1/(q)_inf = sum_{m>=0} q^{m^2-l^2} S_{m,l}(q)/(q)_m";
    report.params = {{"l_max", l_max}, {"cutoff", cutoff.to_string()}};
    const QSeries lhs = poch_inv(std::nullopt, cutoff);
    for (std::int64_t l = -l_max; l <= l_max; ++l) {
        const std::int64_t al = l < 0 ? -l : l;
        auto bound = [&](std::int64_t m) -> std::optional<QExp> {
            const auto e = supernomial_min_exponent(SupernomialKind::plain, m, l);
            if (!e) {
                return std::nullopt;
            }
            return QExp(m * m - l * l + *e);
        };
        const auto sum = detail::sum_over_m(al, cutoff.ceil() + al + 2, cutoff, bound, [&](std::int64_t m) {
            const QExp shift(m * m - l * l);
            return S(m, l, cutoff - shift).shifted(shift) * poch_inv(m, cutoff);
        });
        const auto cmp = compare(lhs, sum.sum);
        report.cases.push_back(check_case("expansion l=" + std::to_string(l), cmp.equal && !sum.cap_hit,
                                          cmp.equal ? (sum.cap_hit ? "hard cap on m reached" : "")
                                                    : "first mismatch at q^" + cmp.first_mismatch->to_string()));
    }
    return report;
}

} // namespace qlab
