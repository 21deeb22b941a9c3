#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlab/model.hpp"
#include "qlab/qseries.hpp"
#include "qlab/report.hpp"
#include "qlab/tau.hpp"

namespace qlab {

/// Integers x with A x^2 + B x + C < bound, for A > 0. Empty when none.
std::optional<std::pair<std::int64_t, std::int64_t>> quadratic_window(const QExp& A, const QExp& B, const QExp& C,
                                                                      const QExp& bound);

/// Normalised Virasoro character q^{-Delta_{r,s}} chi_{r,s}(q):
///   sum_lambda (q^{lambda^2 p p' + lambda(p' r - p s)}
///               - q^{lambda^2 p p' + lambda(p' r + p s) + r s}) / (q)_inf,
/// truncated below `cutoff` (> 0).
QSeries rocha_caridi(const ModelParams& params, int r, int s, const QExp& cutoff);

/// Graded piece I_{r,a,b,m}(q): sum over lambda of
///   q^{lambda^2 p p' + lambda(p' r - p a) + m^2 - l1^2} S_{m,l1},  l1 = (a-b)/2 - p' lambda,
/// minus
///   q^{lambda^2 p p' + lambda(p' r + p a) + r a + m^2 - l2^2} S_{m,l2}, l2 = (a+b)/2 + p' lambda.
/// Only |l| <= m contributes, so the lambda-sum is finite. Exact unless a
/// cutoff is given. Throws std::invalid_argument unless a = b (mod 2), m >= 0.
QSeries I_m(const ModelParams& params, int r, int a, int b, std::int64_t m,
            std::optional<QExp> cutoff = std::nullopt);

/// Lower bound for the exponents of I_m (the least exponent over all its
/// summands); empty when no summand survives.
std::optional<QExp> I_m_min_exponent(const ModelParams& params, int r, int a, int b, std::int64_t m);

struct Rocha2Instance {
    ModelParams params;
    int r;
    int a;
    int b;
};

/// Checks q^{-Delta_{r,a}} chi_{r,a} = sum_{m >= 0} I_{r,a,b,m} / (q)_m below
/// `cutoff`. The m-sum stops once three consecutive m contribute nothing below
/// the cutoff, with a hard cap m <= cutoff + 2 that is flagged when reached.
CaseResult check_rocha2(const Rocha2Instance& inst, const QExp& cutoff);
SuiteReport verify_rocha2(const std::vector<Rocha2Instance>& instances, const QExp& cutoff, unsigned jobs = 1);
/// Default sweep: several models, minimising and non-minimising b.
std::vector<Rocha2Instance> default_rocha2_instances();

/// sum over paths s in P_{a,b,m} of
///   q^{E(s) + m(Delta(r,s_{m-1}) - Delta(r,b) + delta_{s_{m-1},b}) + Delta(r,b) - Delta(r,a)}.
/// Throws std::invalid_argument unless b = b_of(r, a).
QSeries path_side_GEN(const TauTable& tau, int r, int a, int b, std::int64_t m);

/// path_side_GEN = I_m for every (r, a), b = b_of(r, a), 0 <= m <= m_max.
SuiteReport verify_GEN(const TauTable& tau, std::int64_t m_max, unsigned jobs = 1);

/// I_{r,a,b,m} = sum_{d = b, b+-2} q^{m(Delta(r,d) - Delta(r,b) + delta_{d,b}) + Delta(r,b) - Delta(r,a)}
/// X_{a,d,b,m-1} for every (r, a), b = b_of(r, a) and 1 <= m <= m_max. The
/// identity needs the minimising b; other b of the right parity fail it.
SuiteReport verify_IandS(const TauTable& tau, std::int64_t m_max, unsigned jobs = 1);

/// Generating function sum q^{Delta(r,b) + sum_i n_i} over admissible rigged
/// paths ending at b = b_of(r, a), enumerated depth first; all terms with
/// degree below Delta(r,a) + cutoff are produced.
QSeries rigged_path_gf(const TauTable& tau, int r, int a, const QExp& cutoff);

/// rigged_path_gf = q^{Delta(r,a)} rocha_caridi for every (r, a).
SuiteReport verify_rigged(const TauTable& tau, const QExp& cutoff, unsigned jobs = 1);

/// 1/(q)_inf = sum_m q^{m^2 - l^2} S_{m,l} / (q)_m for |l| <= l_max, below cutoff.
SuiteReport verify_expansion_identity(std::int64_t l_max, const QExp& cutoff);

} // namespace qlab
