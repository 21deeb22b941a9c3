#include "qlab/detail/dense.hpp"

#include <algorithm>

namespace qlab::detail {

Dense gaussian(std::int64_t L, std::int64_t a, std::size_t len)
{
    Dense p(len, 0);
    if (len == 0) {
        return p;
    }
    p[0] = 1;
    const std::int64_t n = static_cast<std::int64_t>(len);
    for (std::int64_t i = 1; i <= a; ++i) {
        // times (1 - q^{L-a+i})
        const std::int64_t e = L - a + i;
        for (std::int64_t j = n - 1; j >= e; --j) {
            p[j] -= p[j - e];
        }
        // divided by (1 - q^i)
        for (std::int64_t j = i; j < n; ++j) {
            p[j] += p[j - i];
        }
    }
    return p;
}

Dense mul_trunc(const Dense& x, const Dense& y, std::size_t len)
{
    Dense out(len, 0);
    const std::size_t nx = std::min(x.size(), len);
    for (std::size_t i = 0; i < nx; ++i) {
        if (x[i] == 0) {
            continue;
        }
        const std::size_t ny = std::min(y.size(), len - i);
        for (std::size_t j = 0; j < ny; ++j) {
            if (y[j] != 0) {
                out[i + j] += x[i] * y[j];
            }
        }
    }
    return out;
}

void accumulate(QSeries::Terms& terms, const Dense& d, const QExp& shift, int sign,
                const std::optional<QExp>& cutoff)
{
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] == 0) {
            continue;
        }
        const QExp e = shift + QExp(static_cast<std::int64_t>(k));
        if (cutoff && e >= *cutoff) {
            break;
        }
        auto [it, inserted] = terms.try_emplace(e);
        if (sign > 0) {
            it->second += d[k];
        } else {
            it->second -= d[k];
        }
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

std::size_t length_below(const QExp& shift, const QExp& cutoff)
{
    const std::int64_t n = (cutoff - shift).ceil();
    return n > 0 ? static_cast<std::size_t>(n) : 0;
}

} // namespace qlab::detail
