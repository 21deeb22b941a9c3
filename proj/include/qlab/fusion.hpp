#pragma once

#include <cstdint>
#include <optional>

#include "qlab/qexp.hpp"
#include "qlab/qseries.hpp"
#include "qlab/qzchar.hpp"
#include "qlab/report.hpp"

namespace qlab {

/// Level-k highest weight l of affine sl2 with conformal weight
/// Delta(l, k) = l(l+2) / (4(k+2)).
class AffineLevelData {
public:
    /// Throws std::invalid_argument unless k >= 1 and 0 <= l <= k.
    AffineLevelData(int k, int l);

    int level() const { return k_; }
    int weight() const { return l_; }
    QExp conformal_weight() const;

private:
    int k_;
    int l_;
};

/// Delta(l, k) = l(l+2)/(4(k+2)) without range checks.
QExp affine_conformal_weight(int l, int k);

/// ch pi_1^{*m}: z^l -> [m, (m+l)/2]_q for l = m (mod 2), |l| <= m.
QZChar ch_pi1_fused(std::int64_t m);

/// ch pi_2^{*m}: z^{2l} -> S_{m,l}(q^{-1}).
QZChar ch_pi2_fused(std::int64_t m);

/// ch pi_1^{*L1} * pi_2^{*L2} from the two-row supernomials: z^{2a} -> [L1, L2; a]_q.
QZChar ch_mixed_fused(std::int64_t L1, std::int64_t L2);

/// The same character for even L1 = 2k from the closed form
///   sum_{m=0}^{k} q^{(k-m)(k+L2)} [k, m]_q ch pi_2^{*(L2+m)}.
QZChar ch_mixed_fused_closed(std::int64_t L1, std::int64_t L2);

/// ch pi_1^{*2k1} * pi_2^{*k2} = ch pi_1^{*2(k1-1)} * pi_2^{*(k2+1)}
///   + q^{2k1+k2-1} ch pi_1^{*2(k1-1)} * pi_2^{*k2}
/// for 1 <= k1 <= k1_max, 0 <= k2 <= k2_max, plus agreement of both
/// constructions of the mixed character and the dimension count.
SuiteReport verify_exact_sequence_chars(std::int64_t k1_max, std::int64_t k2_max);

/// Level-1 character sum_n q^{(n+i/2)^2 - i/4} z^{2n+i} / (q)_inf below cutoff.
QZChar level1_char(int i, const QExp& cutoff);

/// sum_{m >= 0} q^{m^2 + shift(m)} / (q)_m ch_{q^{-1},z} pi_2^{*m} below the
/// cutoff for weights |alpha| <= 2 l_max; `with_prefactor = false` drops
/// q^{m^2} (used as a negative control).
QZChar pi2_series(const QExp& cutoff, std::int64_t l_max, bool with_prefactor = true);

/// ch L_{0,1} = sum_m q^{m^2}/(q)_m ch_{q^{-1},z} pi_2^{*m}, all z-components, below cutoff.
SuiteReport verify_pi2pi3(const QExp& cutoff);

/// q^{N^2} ch_{q^{-1},z} pi_1^{*2N} = sum_{m=0}^{N} q^{m^2} [N, m]_q ch_{q^{-1},z} pi_2^{*m} for N <= N_max.
SuiteReport verify_pmn(std::int64_t N_max);

/// sum_lambda q^{-(k+2)lambda^2 + (l+1)lambda}
///   (ch V^{2(k+2)lambda - l} - ch V^{2(k+2)lambda - l - 2}),
/// truncated below `cutoff` when given.
QSeries euler_multiplicity(const QZChar& V, int k, int l, std::optional<QExp> cutoff = std::nullopt);

/// Finitized character at size N:
///   q^{(l-j)^2/4} ( sum_lambda q^{(k+2)(k+3)lambda^2 + ((k+3)(j+1) - (k+2)(l+1))lambda}
///                      [2N, (2N-l+j)/2 + (k+3)lambda]_q
///                 - sum_lambda q^{(k+2)(k+3)lambda^2 - ((k+3)(j+1) + (k+2)(l+1))lambda + (j+1)(l+1)}
///                      [2N, (2N-l-j-2)/2 + (k+3)lambda]_q ).
/// Requires 0 <= j <= k, 0 <= l <= k+1, j = l (mod 2), N >= 0.
QSeries abf_finitized(std::int64_t N, int k, int j, int l);

/// Compares abf_finitized(N) with q^{Delta(l,k+1) - Delta(j,k)} chi_{j+1,l+1} up to
/// `degree` above the leading exponent, for every j = l (mod 2).
SuiteReport verify_abf(std::int64_t N, int k, std::int64_t degree);

/// Character of the m-th graded piece of the (1,3) filtration of the unitary
/// module M(k+2, k+3)_{r,s}: q^{Delta_{r,s}} / (q)_m I_{r,s,r+i,m}, i = r - s (mod 2).
/// Known below Delta_{r,s} + cutoff.
QSeries graded_13_char(int k, int r, int s, std::int64_t m, const QExp& cutoff);

/// Exact numerator q^{Delta_{r,s}} I_{r,s,r+i,m}.
QSeries graded_13_numerator(int k, int r, int s, std::int64_t m);

/// The same numerator from the Euler-Poincare route for r = s (mod 2), j = r-1, l = s-1:
///   q^{Delta(j,k) - Delta(l,k+1) + m^2}
///     euler_multiplicity(ch_{q^{-1}} pi_2^{*m} (x) pi_j, k+1, l).
/// Sectors with r != s (mod 2) are evaluated at the reflected labels
/// (k+2-r, k+3-s).
QSeries graded_13_numerator_euler(int k, int r, int s, std::int64_t m);

/// graded_13_char(k, j+1, l+1, m) = graded_13_char(k, k-j+1, k-l+2, m) for l != j (mod 2),
/// m <= m_max, compared exactly on the numerators.
SuiteReport verify_i1_sector(int k, std::int64_t m_max);

/// For every (r, s): nonnegativity of the graded pieces for m <= m_max, the
/// sum over all m against q^{Delta} chi below Delta + cutoff, and agreement of
/// the two routes for m <= m_max.
SuiteReport verify_grading(int k, std::int64_t m_max, const QExp& cutoff, unsigned jobs = 1);

} // namespace qlab
