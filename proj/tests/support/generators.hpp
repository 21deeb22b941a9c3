#pragma once

#include <cstdint>
#include <random>

#include "qlab/qseries.hpp"

namespace qlab::testing {

/// Small deterministic generator of random q-series for property tests.
class SeriesGen {
public:
    explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin() { return integer(0, 1) == 1; }

    /// Exponent n/den with den in {1, 2, 3, 4, 6, 12} and |n/den| <= range.
    QExp exponent(std::int64_t range = 6)
    {
        static const std::int64_t dens[] = {1, 2, 3, 4, 6, 12};
        const std::int64_t den = dens[integer(0, 5)];
        return QExp(integer(-range * den, range * den), den);
    }

    /// Coefficient of up to ~40 bits, occasionally huge to exercise big integers.
    Coeff coefficient()
    {
        Coeff c = integer(-1000000, 1000000);
        if (integer(0, 9) == 0) {
            c *= Coeff("123456789012345678901234567890");
        }
        return c;
    }

    QSeries exact(int max_terms = 6)
    {
        QSeries::Terms t;
        const int n = static_cast<int>(integer(0, max_terms));
        for (int i = 0; i < n; ++i) {
            t[exponent()] += coefficient();
        }
        return QSeries(std::move(t));
    }

    /// Exact or truncated series; truncated ones get a cutoff above -2.
    QSeries any(int max_terms = 6)
    {
        QSeries s = exact(max_terms);
        if (coin()) {
            return s.truncated(QExp(integer(-2, 8)) + exponent(1).frac());
        }
        return s;
    }

private:
    std::mt19937_64 rng_;
};

/// Partition numbers p(0..n-1) by the standard part-size recurrence.
inline std::vector<Coeff> partition_numbers(std::size_t n)
{
    std::vector<Coeff> p(n, 0);
    if (n == 0) {
        return p;
    }
    p[0] = 1;
    for (std::size_t part = 1; part < n; ++part) {
        for (std::size_t total = part; total < n; ++total) {
            p[total] += p[total - part];
        }
    }
    return p;
}

} // namespace qlab::testing
