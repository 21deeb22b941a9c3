#pragma once

#include <cstdint>
#include <vector>

#include "qlab/qseries.hpp"
#include "qlab/report.hpp"
#include "qlab/tau.hpp"

namespace qlab {

/// X_{a,b,c,m}(q) from the recurrence
///   X_{a,b,c,m+1} = sum_{d = b, b+-2} q^{(m+1) w(d,b,c)} X_{a,d,b,m},
/// X_{a,b,c,0} = delta_{a,b}. Zero unless (b, c) is a valid step.
QSeries config_sum_X(int a, int b, int c, std::int64_t m, const TauTable& tau);

/// All X_{a,b,c,m} for fixed a and m, indexed [b][c] with 0 <= b, c <= p'
/// (entries outside valid steps are zero).
std::vector<std::vector<QSeries>> config_sum_table(int a, std::int64_t m, const TauTable& tau);

/// Closed form f_{a,b,c,m}(q) with l = (b - a)/2 (a may be any integer).
/// Zero for triples outside 1 <= b, c <= p'-1, a = b (mod 2), c in {b, b+-2}.
QSeries f_function(std::int64_t a, int b, int c, std::int64_t m, const TauTable& tau);

/// sum_{eps = +-} eps sum_n f_{eps(a + 2p'n), b, c, m}. Only the finitely many
/// n with |l| <= m contribute.
QSeries alternating_f_sum(int a, int b, int c, std::int64_t m, const TauTable& tau);

/// Checks X_{a,b,c,m} = alternating_f_sum for every valid (a, b, c) and
/// 0 <= m <= m_max.
SuiteReport verify_Xandf(const TauTable& tau, std::int64_t m_max, unsigned jobs = 1);

} // namespace qlab
