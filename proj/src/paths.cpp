#include "qlab/paths.hpp"

#include <stdexcept>

#include "qlab/weights.hpp"

namespace qlab {

bool Path::is_valid(int p_prime) const
{
    if (sites.empty()) {
        return false;
    }
    if (sites.size() == 1) {
        return sites[0] >= 1 && sites[0] <= p_prime - 1;
    }
    for (std::size_t i = 0; i + 1 < sites.size(); ++i) {
        if (!valid_step(sites[i], sites[i + 1], p_prime)) {
            return false;
        }
    }
    return true;
}

std::vector<Path> enumerate_paths(int a, int b, std::int64_t m, const ModelParams& params)
{
    if (m < 0) {
        throw std::invalid_argument("enumerate_paths: m must be >= 0");
    }
    const int pp = params.p_prime();
    std::vector<Path> out;
    if ((a - b) % 2 != 0 || a < 1 || a > pp - 1 || b < 1 || b > pp - 1) {
        return out;
    }
    Path cur{{a}};
    // Depth-first in increasing next-site order yields lexicographic output.
    auto rec = [&](auto& self, std::int64_t left) -> void {
        const int s = cur.sites.back();
        if (left == 0) {
            if (s == b) {
                out.push_back(cur);
            }
            return;
        }
        if (std::abs(s - b) > 2 * left) {
            return;
        }
        for (int d = -2; d <= 2; d += 2) {
            if (valid_step(s, s + d, pp)) {
                cur.sites.push_back(s + d);
                self(self, left - 1);
                cur.sites.pop_back();
            }
        }
    };
    rec(rec, m);
    return out;
}

Coeff count_paths(int a, int b, std::int64_t m, const ModelParams& params)
{
    const int pp = params.p_prime();
    if (a < 1 || a > pp - 1 || b < 1 || b > pp - 1) {
        return 0;
    }
    std::vector<Coeff> v(static_cast<std::size_t>(pp), 0);
    v[static_cast<std::size_t>(a)] = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        std::vector<Coeff> next(v.size(), 0);
        for (int s = 1; s <= pp - 1; ++s) {
            for (int d = -2; d <= 2; d += 2) {
                if (valid_step(s, s + d, pp)) {
                    next[static_cast<std::size_t>(s + d)] += v[static_cast<std::size_t>(s)];
                }
            }
        }
        v.swap(next);
    }
    return v[static_cast<std::size_t>(b)];
}

QExp energy(const Path& path, const TauTable& tau)
{
    QExp e(0);
    const auto& s = path.sites;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        e += QExp(static_cast<std::int64_t>(i)) * weight(s[i - 1], s[i], s[i + 1], tau);
    }
    return e;
}

bool RiggedPath::rigging_in_cosets(const ConformalData& cd) const
{
    const auto& s = path.sites;
    if (rigging.size() + 1 != s.size()) {
        return false;
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(rigging[i - 1] - cd.delta(r, s[i - 1]) + cd.delta(r, s[i])).is_integer()) {
            return false;
        }
    }
    return true;
}

bool RiggedPath::is_admissible(const TauTable& tau) const
{
    const ConformalData cd(tau.params());
    if (!path.is_valid(tau.p_prime()) || !rigging_in_cosets(cd)) {
        return false;
    }
    const auto& s = path.sites;
    const std::size_t m = rigging.size();
    if (m == 0) {
        return true;
    }
    for (std::size_t i = 1; i < m; ++i) {
        if (rigging[i - 1] - rigging[i] < weight(s[i - 1], s[i], s[i + 1], tau)) {
            return false;
        }
    }
    const QExp bound = cd.delta(r, s[m - 1]) - cd.delta(r, s[m]) + QExp(s[m - 1] == s[m] ? 1 : 0);
    return !(rigging[m - 1] < bound);
}

QExp RiggedPath::degree(const ConformalData& cd) const
{
    QExp d = cd.delta(r, path.sites.back());
    for (const auto& n : rigging) {
        d += n;
    }
    return d;
}

} // namespace qlab
