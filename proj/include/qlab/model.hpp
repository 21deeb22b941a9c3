#pragma once

#include <cstdint>
#include <string>

#include "qlab/qexp.hpp"
#include "qlab/qseries.hpp"

namespace qlab {

/// Coprime pair (p, p') labelling the minimal model M(p, p'), t = p'/p.
class ModelParams {
public:
    /// Throws std::invalid_argument unless gcd(p, p') = 1 and 3 <= p < p'.
    ModelParams(int p, int p_prime);

    int p() const { return p_; }
    int p_prime() const { return pp_; }
    QExp t() const { return QExp(pp_, p_); }
    /// 1 < t < 2, the range where the path description applies.
    bool path_regime() const { return pp_ < 2 * p_; }

    std::string to_string() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    int p_;
    int pp_;
};

/// Conformal data derived from (p, p').
class ConformalData {
public:
    explicit ConformalData(ModelParams params) : params_(params) {}

    const ModelParams& params() const { return params_; }

    /// Delta_{r,s} = ((r t - s)^2 - (t - 1)^2) / (4t). Defined for all
    /// integers r, s; the Kac table is 1 <= r <= p-1, 1 <= s <= p'-1.
    QExp delta(int r, int s) const;
    /// c = 13 - 6 (t + 1/t).
    QExp central_charge() const;

private:
    ModelParams params_;
};

/// The unique b with b = a (mod 2), 1 <= b <= p'-1 minimising Delta_{r,b}.
/// Throws std::domain_error if two candidates tie.
int b_of(int r, int a, const ConformalData& cd);

/// True when every exponent of `s` (and its cutoff) has a denominator
/// dividing 4 p p'.
bool exponents_fit(const QSeries& s, const ModelParams& params);

} // namespace qlab
