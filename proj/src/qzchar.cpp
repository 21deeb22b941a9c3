#include "qlab/qzchar.hpp"

#include <set>

namespace qlab {

QZChar::QZChar(Components components) : components_(std::move(components)) { prune(); }

void QZChar::prune()
{
    for (auto it = components_.begin(); it != components_.end();) {
        if (it->second.empty() && it->second.is_exact()) {
            it = components_.erase(it);
        } else {
            ++it;
        }
    }
}

QSeries QZChar::component(std::int64_t alpha) const
{
    auto it = components_.find(alpha);
    return it == components_.end() ? QSeries() : it->second;
}

void QZChar::add_to(std::int64_t alpha, const QSeries& s)
{
    auto [it, inserted] = components_.try_emplace(alpha, s);
    if (!inserted) {
        it->second += s;
    }
    if (it->second.empty() && it->second.is_exact()) {
        components_.erase(it);
    }
}

QZChar QZChar::flipped() const
{
    QZChar out;
    for (const auto& [alpha, s] : components_) {
        out.components_.emplace(alpha, s.flipped());
    }
    return out;
}

QZChar QZChar::times(const QSeries& s) const
{
    QZChar out;
    for (const auto& [alpha, c] : components_) {
        out.components_.emplace(alpha, c * s);
    }
    out.prune();
    return out;
}

QZChar QZChar::tensor_irrep(std::int64_t j) const
{
    QZChar out;
    for (const auto& [alpha, c] : components_) {
        for (std::int64_t mu = -j; mu <= j; mu += 2) {
            out.add_to(alpha + mu, c);
        }
    }
    return out;
}

QZChar QZChar::truncated(const QExp& cutoff) const
{
    QZChar out;
    for (const auto& [alpha, c] : components_) {
        out.components_.emplace(alpha, c.truncated(cutoff));
    }
    return out;
}

bool QZChar::weight_symmetric() const
{
    for (const auto& [alpha, c] : components_) {
        if (!compare(c, component(-alpha)).equal) {
            return false;
        }
    }
    return true;
}

Coeff QZChar::eval_at_one() const
{
    Coeff total = 0;
    for (const auto& kv : components_) {
        total += kv.second.eval_at_one();
    }
    return total;
}

QZChar& QZChar::operator+=(const QZChar& o)
{
    for (const auto& [alpha, c] : o.components_) {
        add_to(alpha, c);
    }
    return *this;
}

QZChar& QZChar::operator-=(const QZChar& o)
{
    for (const auto& [alpha, c] : o.components_) {
        add_to(alpha, -c);
    }
    return *this;
}

CharComparison compare(const QZChar& a, const QZChar& b)
{
    std::set<std::int64_t> keys;
    for (const auto& kv : a.components()) {
        keys.insert(kv.first);
    }
    for (const auto& kv : b.components()) {
        keys.insert(kv.first);
    }
    CharComparison r;
    for (std::int64_t alpha : keys) {
        const auto c = compare(a.component(alpha), b.component(alpha));
        if (!c.equal) {
            r.equal = false;
            r.first_alpha = alpha;
            r.first_mismatch = c.first_mismatch;
            return r;
        }
    }
    return r;
}

} // namespace qlab
