#pragma once

#include <json.hpp>

#include "qlab/qseries.hpp"
#include "qlab/qzchar.hpp"

namespace qlab {

// Wire format:
//   {"terms": [{"num": n, "den": d, "coeff": "<decimal>"}, ...],   // ascending exponent
//    "cutoff": {"num": n, "den": d} | null}                          // null = exact
nlohmann::json to_json(const QExp& e);
QExp qexp_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QSeries& s);
/// Throws std::invalid_argument on malformed input (zero/unsorted/duplicate
/// terms, non-canonical exponents, terms at or above the cutoff).
QSeries series_from_json(const nlohmann::json& j);

/// {"components": [{"alpha": a, "series": <QSeries>}, ...]} ascending in alpha.
nlohmann::json to_json(const QZChar& c);
QZChar qzchar_from_json(const nlohmann::json& j);

} // namespace qlab
