#pragma once

#include <string>
#include <vector>

#include "qlab/model.hpp"
#include "qlab/report.hpp"

namespace qlab {

enum class TauLabel { one_a, one_b, two };

std::string to_string(TauLabel label);

/// tau(s) = [(s+1)/t] - [(s-1)/t], which is 1 or 2 for 1 < t < 2.
int tau_value(const ModelParams& params, int s);

/// Labelling s -> {1A, 1B, 2} of the sites 1 <= s <= p'-1.
class TauTable {
public:
    /// Wraps explicit labels (index s-1) without validating them.
    static TauTable from_labels(ModelParams params, std::vector<TauLabel> labels);

    const ModelParams& params() const { return params_; }
    int p_prime() const { return params_.p_prime(); }
    const std::vector<TauLabel>& labels() const { return labels_; }
    /// Throws std::out_of_range unless 1 <= s <= p'-1.
    TauLabel label(int s) const;
    /// Numeric part of the label.
    int tau(int s) const { return label(s) == TauLabel::two ? 2 : 1; }

private:
    TauTable(ModelParams params, std::vector<TauLabel> labels)
        : params_(params), labels_(std::move(labels)) {}

    ModelParams params_;
    std::vector<TauLabel> labels_;
};

/// Builds the labelling used by the weight table and validates it.
/// Throws std::invalid_argument outside 1 < t < 2 and std::logic_error when a
/// constraint fails.
TauTable make_tau_table(const ModelParams& params);

/// Names of the constraints violated by `table` (empty when valid), each with
/// the offending site.
std::vector<std::string> tau_table_violations(const TauTable& table);

/// Builds and validates the labelling for every coprime (p, p') with
/// 3 <= p < p' <= pp_max and 1 < t < 2.
SuiteReport verify_tau_tables(int pp_max, unsigned jobs = 1);

} // namespace qlab
