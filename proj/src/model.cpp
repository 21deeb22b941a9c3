#include "qlab/model.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace qlab {

ModelParams::ModelParams(int p, int p_prime) : p_(p), pp_(p_prime)
{
    if (p < 3 || p_prime <= p) {
        throw std::invalid_argument("ModelParams: need 3 <= p < p'");
    }
    if (std::gcd(p, p_prime) != 1) {
        throw std::invalid_argument("ModelParams: p and p' must be coprime");
    }
}

std::string ModelParams::to_string() const { return "(" + std::to_string(p_) + "," + std::to_string(pp_) + ")"; }

QExp ConformalData::delta(int r, int s) const
{
    const std::int64_t p = params_.p();
    const std::int64_t pp = params_.p_prime();
    const std::int64_t x = r * pp - s * p;
    return QExp(x * x - (pp - p) * (pp - p), 4 * p * pp);
}

QExp ConformalData::central_charge() const
{
    const std::int64_t p = params_.p();
    const std::int64_t pp = params_.p_prime();
    return QExp(13 * p * pp - 6 * pp * pp - 6 * p * p, p * pp);
}

int b_of(int r, int a, const ConformalData& cd)
{
    const int pp = cd.params().p_prime();
    std::optional<int> best;
    bool tie = false;
    for (int b = (a % 2 == 0) ? 2 : 1; b <= pp - 1; b += 2) {
        if (!best || cd.delta(r, b) < cd.delta(r, *best)) {
            best = b;
            tie = false;
        } else if (cd.delta(r, b) == cd.delta(r, *best)) {
            tie = true;
        }
    }
    if (!best) {
        throw std::domain_error("b_of: no site of the required parity");
    }
    if (tie) {
        throw std::domain_error("b_of: minimiser of Delta is not unique");
    }
    return *best;
}

bool exponents_fit(const QSeries& s, const ModelParams& params)
{
    const std::int64_t bound = 4LL * params.p() * params.p_prime();
    auto fits = [&](const QExp& e) { return bound % e.den() == 0; };
    for (const auto& kv : s.terms()) {
        if (!fits(kv.first)) {
            return false;
        }
    }
    return !s.cutoff() || fits(*s.cutoff());
}

} // namespace qlab
