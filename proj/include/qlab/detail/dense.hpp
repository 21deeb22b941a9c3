#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlab/qseries.hpp"

// Dense integer-exponent power series helpers. Index k holds the coefficient
// of q^k; a vector of length n is a series known below degree n.
namespace qlab::detail {

using Dense = std::vector<Coeff>;

/// Degree of the Gaussian polynomial [L, a] (0 <= a <= L).
inline std::int64_t gaussian_degree(std::int64_t L, std::int64_t a) { return a * (L - a); }

/// First `len` coefficients of the Gaussian polynomial [L, a], 0 <= a <= L.
Dense gaussian(std::int64_t L, std::int64_t a, std::size_t len);

/// Cauchy product truncated to `len` coefficients.
Dense mul_trunc(const Dense& x, const Dense& y, std::size_t len);

/// Adds sign * q^shift * d into `terms`, keeping only exponents below `cutoff` if given.
void accumulate(QSeries::Terms& terms, const Dense& d, const QExp& shift, int sign,
                const std::optional<QExp>& cutoff);

/// Number of integer degrees k >= 0 with shift + k < cutoff (0 if none).
std::size_t length_below(const QExp& shift, const QExp& cutoff);

} // namespace qlab::detail
