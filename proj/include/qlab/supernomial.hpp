#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qlab/qseries.hpp"
#include "qlab/report.hpp"

namespace qlab {

enum class SupernomialKind { plain, tilde };

/// S_{m,l}(q) (plain) or its companion S~_{m,l}(q) (tilde), evaluated from
/// the explicit nu-sum
///   sum_nu q^{(nu+l-m)(nu+l-eps) + nu(nu-m)} [m, nu]_q [nu, m-l-nu]_q
/// with eps = 0 (plain) or 1 (tilde). Laurent polynomials in q^{-1}; zero for
/// |l| > m. When `cutoff` is given only exponents below it are produced.
QSeries supernomial(SupernomialKind kind, std::int64_t m, std::int64_t l,
                    std::optional<QExp> cutoff = std::nullopt);

inline QSeries S(std::int64_t m, std::int64_t l, std::optional<QExp> cutoff = std::nullopt)
{
    return supernomial(SupernomialKind::plain, m, l, cutoff);
}

inline QSeries S_tilde(std::int64_t m, std::int64_t l, std::optional<QExp> cutoff = std::nullopt)
{
    return supernomial(SupernomialKind::tilde, m, l, cutoff);
}

/// Lowest exponent occurring in the supernomial, empty when it vanishes.
/// Every nu-summand has positive coefficients, so this is the minimum of the
/// summand prefactor exponents.
std::optional<std::int64_t> supernomial_min_exponent(SupernomialKind kind, std::int64_t m, std::int64_t l);

using SupernomialSource = std::function<QSeries(SupernomialKind, std::int64_t, std::int64_t)>;

/// Checks the reflection rules and the six three-term recurrences linking
/// S_{m+1}, S~_{m+1} to S_m, S~_m for 0 <= m < m_max, |l| <= m+1. The
/// supernomials are drawn from `source` (the nu-sum by default), so a
/// perturbed source can be used to exercise the checker itself.
SuiteReport verify_S_recurrences(int m_max, unsigned jobs = 1, const SupernomialSource& source = {});

/// JSON table {"m": .., "l": .., "kind": .., "series": ..} for 0 <= m <= m_max, |l| <= m.
nlohmann::json supernomial_table(SupernomialKind kind, int m_max);

} // namespace qlab
