#include "qlab/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace qlab {

namespace {

std::optional<QExp> min_cutoff(const std::optional<QExp>& a, const std::optional<QExp>& b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return std::min(*a, *b);
}

} // namespace

QSeries::QSeries(Terms terms, std::optional<QExp> cutoff) : terms_(std::move(terms)), cutoff_(cutoff)
{
    normalize();
}

void QSeries::normalize()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || (cutoff_ && it->first >= *cutoff_)) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

QSeries QSeries::zero(std::optional<QExp> cutoff) { return QSeries(Terms{}, cutoff); }

QSeries QSeries::monomial(const QExp& e, const Coeff& c, std::optional<QExp> cutoff)
{
    Terms t;
    t.emplace(e, c);
    return QSeries(std::move(t), cutoff);
}

QSeries QSeries::from_dense(std::initializer_list<long> coeffs, std::int64_t shift)
{
    Terms t;
    std::int64_t k = shift;
    for (long c : coeffs) {
        if (c != 0) {
            t.emplace(QExp(k), Coeff(c));
        }
        ++k;
    }
    return QSeries(std::move(t));
}

std::optional<QExp> QSeries::floor() const
{
    if (!terms_.empty()) {
        return terms_.begin()->first;
    }
    return cutoff_;
}

std::optional<QExp> QSeries::top() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

Coeff QSeries::coeff(const QExp& e) const
{
    if (cutoff_ && e >= *cutoff_) {
        throw std::out_of_range("QSeries::coeff: exponent " + e.to_string() + " not below cutoff " +
                                cutoff_->to_string());
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

QSeries QSeries::truncated(const QExp& c) const
{
    QSeries out;
    out.cutoff_ = min_cutoff(cutoff_, c);
    auto end = terms_.lower_bound(*out.cutoff_);
    out.terms_.insert(terms_.begin(), end);
    return out;
}

QSeries QSeries::shifted(const QExp& e) const
{
    QSeries out;
    if (cutoff_) {
        out.cutoff_ = *cutoff_ + e;
    }
    auto hint = out.terms_.end();
    for (const auto& [k, v] : terms_) {
        hint = out.terms_.emplace_hint(hint, k + e, v);
    }
    return out;
}

QSeries QSeries::flipped() const
{
    if (!is_exact()) {
        throw std::logic_error("QSeries::flipped: series is truncated");
    }
    QSeries out;
    for (const auto& [k, v] : terms_) {
        out.terms_.emplace(-k, v);
    }
    return out;
}

QSeries QSeries::scaled(const Coeff& c) const
{
    if (c == 0) {
        return zero(cutoff_);
    }
    QSeries out = *this;
    for (auto& kv : out.terms_) {
        kv.second *= c;
    }
    return out;
}

Coeff QSeries::eval_at_one() const
{
    if (!is_exact()) {
        throw std::logic_error("QSeries::eval_at_one: series is truncated");
    }
    Coeff total = 0;
    for (const auto& kv : terms_) {
        total += kv.second;
    }
    return total;
}

QSeries QSeries::operator-() const { return scaled(-1); }

QSeries& QSeries::operator+=(const QSeries& o)
{
    cutoff_ = min_cutoff(cutoff_, o.cutoff_);
    for (const auto& [k, v] : o.terms_) {
        if (cutoff_ && k >= *cutoff_) {
            break;
        }
        auto [it, inserted] = terms_.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }
    if (cutoff_) {
        terms_.erase(terms_.lower_bound(*cutoff_), terms_.end());
    }
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b)
{
    const auto fa = a.floor();
    const auto fb = b.floor();
    if (!fa || !fb) {
        return QSeries();
    }
    std::optional<QExp> cut;
    if (a.cutoff_) {
        cut = *a.cutoff_ + *fb;
    }
    if (b.cutoff_) {
        cut = min_cutoff(cut, *b.cutoff_ + *fa);
    }
    QSeries out;
    out.cutoff_ = cut;
    for (const auto& [ea, ca] : a.terms_) {
        if (cut && ea + *fb >= *cut) {
            break;
        }
        for (const auto& [eb, cb] : b.terms_) {
            const QExp e = ea + eb;
            if (cut && e >= *cut) {
                break;
            }
            auto [it, inserted] = out.terms_.try_emplace(e);
            it->second += ca * cb;
        }
    }
    out.normalize();
    return out;
}

std::string QSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) {
            os << (v < 0 ? " - " : " + ");
        } else if (v < 0) {
            os << "-";
        }
        first = false;
        const Coeff mag = abs(v);
        if (k == QExp(0)) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << "q^" << (k.is_integer() ? k.to_string() : "(" + k.to_string() + ")");
    }
    if (first) {
        os << "0";
    }
    if (cutoff_) {
        os << " + O(q^" << cutoff_->to_string() << ")";
    }
    return os.str();
}

QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

SeriesComparison compare(const QSeries& a, const QSeries& b)
{
    SeriesComparison r;
    r.verified_below = min_cutoff(a.cutoff(), b.cutoff());
    const QSeries diff = r.verified_below ? (a.truncated(*r.verified_below) - b.truncated(*r.verified_below))
                                          : (a - b);
    if (!diff.empty()) {
        r.equal = false;
        r.first_mismatch = diff.terms().begin()->first;
    }
    return r;
}

bool nonnegative(const QSeries& s)
{
    for (const auto& kv : s.terms()) {
        if (kv.second < 0) {
            return false;
        }
    }
    return true;
}

} // namespace qlab
