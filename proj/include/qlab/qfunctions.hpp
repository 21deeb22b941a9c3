#pragma once

#include <cstdint>
#include <optional>

#include "qlab/qseries.hpp"

namespace qlab {

/// 1/(q)_m truncated below `cutoff`; `m` empty means m = infinity, i.e. the
/// partition generating function.
QSeries poch_inv(std::optional<std::int64_t> m, const QExp& cutoff);

/// (q)_m = prod_{i=1}^m (1 - q^i), exact.
QSeries poch(std::int64_t m);

/// Gaussian binomial (q^{L-a+1})_a / (q)_a for integer a >= 0 (any integer L),
/// zero for a < 0. For L < 0 the result is a Laurent polynomial.
QSeries q_binomial(std::int64_t L, std::int64_t a);

/// (q)_n / ((q)_a (q)_b (q)_c); zero if an index is negative.
/// Throws std::invalid_argument unless a + b + c == n.
QSeries q_trinomial(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c);

/// Two-row q-supernomial [L1, L2; a]_q, the graded weight-2a multiplicity of
/// pi_1^{*L1} * pi_2^{*L2}. Requires L1, L2 >= 0; zero when a + L1/2 is not
/// an integer or out of range.
QSeries supernomial2(std::int64_t L1, std::int64_t L2, const QExp& a);

} // namespace qlab
