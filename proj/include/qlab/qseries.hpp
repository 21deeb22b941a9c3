#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qlab/qexp.hpp"

namespace qlab {

using Coeff = mpz_class;

/// Sparse Laurent series in q with rational exponents and big-integer
/// coefficients.
///
/// A series is either exact (a finite Laurent polynomial, no cutoff) or
/// truncated: all coefficients strictly below `cutoff()` are known and nothing
/// at or above it is stored. Zero coefficients are never stored.
class QSeries {
public:
    using Terms = std::map<QExp, Coeff>;

    /// The exact zero series.
    QSeries() = default;
    explicit QSeries(Terms terms, std::optional<QExp> cutoff = std::nullopt);

    static QSeries zero(std::optional<QExp> cutoff = std::nullopt);
    static QSeries one() { return monomial(QExp(0)); }
    static QSeries monomial(const QExp& e, const Coeff& c = 1, std::optional<QExp> cutoff = std::nullopt);
    /// Integer-exponent polynomial sum_k coeffs[k] q^(k + shift).
    static QSeries from_dense(std::initializer_list<long> coeffs, std::int64_t shift = 0);

    const Terms& terms() const { return terms_; }
    const std::optional<QExp>& cutoff() const { return cutoff_; }
    bool is_exact() const { return !cutoff_.has_value(); }
    /// True when no term is stored (the known part is zero).
    bool empty() const { return terms_.empty(); }

    /// Known lower bound of the support: the lowest stored exponent, else the
    /// cutoff; empty for the exact zero series.
    std::optional<QExp> floor() const;
    /// Highest stored exponent; empty when nothing is stored.
    std::optional<QExp> top() const;

    /// Coefficient of q^e. Throws std::out_of_range when e is at or above the cutoff.
    Coeff coeff(const QExp& e) const;
    Coeff coeff(std::int64_t e) const { return coeff(QExp(e)); }

    /// Drops everything at or above `c` (keeps the smaller of both cutoffs).
    QSeries truncated(const QExp& c) const;
    /// Multiplication by q^e.
    QSeries shifted(const QExp& e) const;
    /// Substitution q -> q^{-1}; exact polynomials only.
    QSeries flipped() const;
    QSeries scaled(const Coeff& c) const;

    /// Sum of all coefficients (q = 1); exact polynomials only.
    Coeff eval_at_one() const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    std::string to_string() const;

private:
    void normalize();

    Terms terms_;
    std::optional<QExp> cutoff_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);

/// Result of comparing two series on their common known range.
struct SeriesComparison {
    bool equal = true;
    /// Lowest exponent where the coefficients differ.
    std::optional<QExp> first_mismatch;
    /// Equality was checked for all exponents strictly below this bound
    /// (empty when both series are exact).
    std::optional<QExp> verified_below;
};

/// Compares coefficients for every exponent strictly below min(cutoffs).
SeriesComparison compare(const QSeries& a, const QSeries& b);

/// True when every stored coefficient is >= 0.
bool nonnegative(const QSeries& s);

} // namespace qlab
