#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qlab/qseries.hpp"

namespace qlab::detail {

struct MSum {
    QSeries sum;
    std::int64_t last_m = 0;
    bool cap_hit = false;
};

/// Adds term(m) for m = m_start, m_start+1, ... and stops once `quiet`
/// consecutive m after the first contributing one have lower_bound(m) empty
/// or >= cutoff, or at m = m_cap.
/// Terms whose bound is at or above the cutoff are skipped.
inline MSum sum_over_m(std::int64_t m_start, std::int64_t m_cap, const QExp& cutoff,
                       const std::function<std::optional<QExp>(std::int64_t)>& lower_bound,
                       const std::function<QSeries(std::int64_t)>& term, int quiet = 3)
{
    MSum out;
    out.sum = QSeries::zero(cutoff);
    int idle = 0;
    bool started = false;
    std::int64_t m = m_start;
    for (; idle < quiet; ++m) {
        if (m > m_cap) {
            out.cap_hit = true;
            break;
        }
        const auto lb = lower_bound(m);
        if (!lb || !(*lb < cutoff)) {
            if (started) {
                ++idle;
            }
            continue;
        }
        idle = 0;
        started = true;
        out.sum += term(m);
    }
    out.last_m = m - 1;
    out.sum = out.sum.truncated(cutoff);
    return out;
}

} // namespace qlab::detail
