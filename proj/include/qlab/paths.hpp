#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlab/model.hpp"
#include "qlab/qexp.hpp"
#include "qlab/qseries.hpp"
#include "qlab/tau.hpp"

namespace qlab {

/// Restricted path (s_0, ..., s_m); its length is m = sites.size() - 1.
struct Path {
    std::vector<int> sites;

    std::int64_t length() const { return static_cast<std::int64_t>(sites.size()) - 1; }
    /// Every consecutive pair is a valid step for level p'.
    bool is_valid(int p_prime) const;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// All paths of length m from a to b in lexicographic order.
std::vector<Path> enumerate_paths(int a, int b, std::int64_t m, const ModelParams& params);

/// Number of paths of length m from a to b, by powers of the step matrix.
Coeff count_paths(int a, int b, std::int64_t m, const ModelParams& params);

/// E(s) = sum_{i=1}^{len-1} i w(s_{i-1}, s_i, s_{i+1}).
QExp energy(const Path& path, const TauTable& tau);

/// A path with rigging (n_1, ..., n_m) relative to r.
struct RiggedPath {
    Path path;
    std::vector<QExp> rigging;
    int r = 1;

    /// n_i lies in Z + Delta(r, s_{i-1}) - Delta(r, s_i) for every i.
    bool rigging_in_cosets(const ConformalData& cd) const;
    /// Cosets hold, n_i - n_{i+1} >= w(s_{i-1}, s_i, s_{i+1}) for i < m and
    /// n_m >= Delta(r, s_{m-1}) - Delta(r, s_m) + delta_{s_{m-1}, s_m}.
    bool is_admissible(const TauTable& tau) const;
    /// Delta(r, s_m) + sum_i n_i.
    QExp degree(const ConformalData& cd) const;
};

} // namespace qlab
