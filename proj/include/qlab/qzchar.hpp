#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qlab/qseries.hpp"

namespace qlab {

/// Graded character sum_alpha z^alpha ch_q(V^alpha), indexed by the
/// h_0-eigenvalue alpha. Components that are zero are not stored.
class QZChar {
public:
    using Components = std::map<std::int64_t, QSeries>;

    QZChar() = default;
    explicit QZChar(Components components);

    const Components& components() const { return components_; }
    /// Component of z^alpha; exact zero when absent.
    QSeries component(std::int64_t alpha) const;
    void add_to(std::int64_t alpha, const QSeries& s);

    /// ch_{q^{-1}, z}: every component flipped. Exact components only.
    QZChar flipped() const;
    /// Every component multiplied by `s`.
    QZChar times(const QSeries& s) const;
    /// Tensor product with the irreducible (j+1)-dimensional sl2 module,
    /// which carries no q-grading.
    QZChar tensor_irrep(std::int64_t j) const;
    QZChar truncated(const QExp& cutoff) const;

    /// True when component(alpha) == component(-alpha) for all alpha.
    bool weight_symmetric() const;
    /// Total dimension at q = z = 1; exact components only.
    Coeff eval_at_one() const;

    QZChar& operator+=(const QZChar& o);
    QZChar& operator-=(const QZChar& o);
    friend QZChar operator+(QZChar a, const QZChar& b) { return a += b; }
    friend QZChar operator-(QZChar a, const QZChar& b) { return a -= b; }

private:
    void prune();

    Components components_;
};

struct CharComparison {
    bool equal = true;
    std::optional<std::int64_t> first_alpha;
    std::optional<QExp> first_mismatch;
};

/// Componentwise comparison on each component's common known range.
CharComparison compare(const QZChar& a, const QZChar& b);

} // namespace qlab
