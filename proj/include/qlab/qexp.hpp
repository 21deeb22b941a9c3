#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace qlab {

/// Exact rational exponent of q, always kept in lowest terms with a positive
/// denominator.
class QExp {
public:
    constexpr QExp() = default;
    QExp(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    /// Largest integer not exceeding the value.
    std::int64_t floor() const;
    /// Smallest integer not below the value.
    std::int64_t ceil() const;
    /// value - floor(value), in [0,1).
    QExp frac() const;

    QExp operator-() const { return QExp(-num_, den_); }
    QExp& operator+=(const QExp& o);
    QExp& operator-=(const QExp& o);
    QExp& operator*=(const QExp& o);
    QExp& operator/=(const QExp& o);

    friend QExp operator+(QExp a, const QExp& b) { return a += b; }
    friend QExp operator-(QExp a, const QExp& b) { return a -= b; }
    friend QExp operator*(QExp a, const QExp& b) { return a *= b; }
    friend QExp operator/(QExp a, const QExp& b) { return a /= b; }

    friend bool operator==(const QExp& a, const QExp& b) = default;
    friend std::strong_ordering operator<=>(const QExp& a, const QExp& b);

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QExp& e);

/// Smallest element of the coset `offset + Z` that is >= `bound`.
QExp ceil_to_coset(const QExp& bound, const QExp& offset);

} // namespace qlab
