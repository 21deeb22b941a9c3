#include "qlab/qfunctions.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "qlab/detail/dense.hpp"

namespace qlab {

QSeries poch_inv(std::optional<std::int64_t> m, const QExp& cutoff)
{
    if (cutoff <= QExp(0)) {
        throw std::invalid_argument("poch_inv: cutoff must be positive");
    }
    const std::int64_t len = cutoff.ceil();
    const std::int64_t parts = m ? std::min(*m, len) : len;
    detail::Dense p(static_cast<std::size_t>(len), 0);
    p[0] = 1;
    for (std::int64_t i = 1; i <= parts; ++i) {
        for (std::int64_t j = i; j < len; ++j) {
            p[j] += p[j - i];
        }
    }
    QSeries::Terms t;
    detail::accumulate(t, p, QExp(0), +1, cutoff);
    return QSeries(std::move(t), cutoff);
}

QSeries poch(std::int64_t m)
{
    const std::int64_t len = m * (m + 1) / 2 + 1;
    detail::Dense p(static_cast<std::size_t>(len), 0);
    p[0] = 1;
    for (std::int64_t i = 1; i <= m; ++i) {
        for (std::int64_t j = len - 1; j >= i; --j) {
            p[j] -= p[j - i];
        }
    }
    QSeries::Terms t;
    detail::accumulate(t, p, QExp(0), +1, std::nullopt);
    return QSeries(std::move(t));
}

QSeries q_binomial(std::int64_t L, std::int64_t a)
{
    if (a < 0) {
        return QSeries();
    }
    if (L >= 0) {
        if (a > L) {
            return QSeries();
        }
        QSeries::Terms t;
        detail::accumulate(t, detail::gaussian(L, a, detail::gaussian_degree(L, a) + 1), QExp(0), +1,
                           std::nullopt);
        return QSeries(std::move(t));
    }
    // [-n, a] = (-1)^a q^{-na - a(a-1)/2} [n+a-1, a]
    const std::int64_t n = -L;
    const QSeries base = q_binomial(n + a - 1, a);
    return base.shifted(QExp(-n * a - a * (a - 1) / 2)).scaled(a % 2 == 0 ? 1 : -1);
}

QSeries q_trinomial(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c)
{
    if (a + b + c != n) {
        throw std::invalid_argument("q_trinomial: a + b + c must equal n");
    }
    if (a < 0 || b < 0 || c < 0) {
        return QSeries();
    }
    return q_binomial(n, a) * q_binomial(b + c, b);
}

namespace {

class Supernomial2 {
public:
    explicit Supernomial2(const QExp& a) : a_(a) {}

    const QSeries& get(std::int64_t L1, std::int64_t L2)
    {
        auto key = std::make_pair(L1, L2);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        QSeries value;
        if (L2 == 0) {
            const QExp idx = a_ + QExp(L1, 2);
            if (idx.is_integer()) {
                value = q_binomial(L1, idx.num());
            }
        } else {
            // [L1, L2] = [L1+2, L2-1] - q^{L1+L2} [L1, L2-1]
            value = get(L1 + 2, L2 - 1) - get(L1, L2 - 1).shifted(QExp(L1 + L2));
        }
        return memo_.emplace(key, std::move(value)).first->second;
    }

private:
    QExp a_;
    std::map<std::pair<std::int64_t, std::int64_t>, QSeries> memo_;
};

} // namespace

QSeries supernomial2(std::int64_t L1, std::int64_t L2, const QExp& a)
{
    if (L1 < 0 || L2 < 0) {
        throw std::invalid_argument("supernomial2: L1 and L2 must be nonnegative");
    }
    Supernomial2 table(a);
    return table.get(L1, L2);
}

} // namespace qlab
