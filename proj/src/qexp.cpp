#include "qlab/qexp.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qlab {

namespace {

std::int64_t narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("QExp: exponent overflow");
    }
    return static_cast<std::int64_t>(v);
}

QExp reduce(__int128 num, __int128 den)
{
    if (den == 0) {
        throw std::domain_error("QExp: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return QExp(narrow(num), narrow(den));
}

} // namespace

QExp::QExp(std::int64_t num, std::int64_t den) : num_(num), den_(den)
{
    if (den_ == 0) {
        throw std::domain_error("QExp: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::int64_t QExp::floor() const
{
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
        --q;
    }
    return q;
}

std::int64_t QExp::ceil() const
{
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) {
        ++q;
    }
    return q;
}

QExp QExp::frac() const { return *this - QExp(floor()); }

QExp& QExp::operator+=(const QExp& o)
{
    if (den_ == o.den_) {
        return *this = reduce(static_cast<__int128>(num_) + o.num_, den_);
    }
    return *this = reduce(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                          static_cast<__int128>(den_) * o.den_);
}

QExp& QExp::operator-=(const QExp& o) { return *this += -o; }

QExp& QExp::operator*=(const QExp& o)
{
    return *this = reduce(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

QExp& QExp::operator/=(const QExp& o)
{
    return *this = reduce(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const QExp& a, const QExp& b)
{
    if (a.den_ == b.den_) {
        return a.num_ <=> b.num_;
    }
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string QExp::to_string() const
{
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const QExp& e) { return os << e.to_string(); }

QExp ceil_to_coset(const QExp& bound, const QExp& offset)
{
    return offset + QExp((bound - offset).ceil());
}

} // namespace qlab
