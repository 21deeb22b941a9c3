#include "qlab/series_json.hpp"

#include <stdexcept>

namespace qlab {

using nlohmann::json;

json to_json(const QExp& e) { return json{{"num", e.num()}, {"den", e.den()}}; }

QExp qexp_from_json(const json& j)
{
    const auto num = j.at("num").get<std::int64_t>();
    const auto den = j.at("den").get<std::int64_t>();
    QExp e(num, den);
    if (e.num() != num || e.den() != den) {
        throw std::invalid_argument("exponent not in lowest terms: " + std::to_string(num) + "/" +
                                    std::to_string(den));
    }
    return e;
}

json to_json(const QSeries& s)
{
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        terms.push_back(json{{"num", e.num()}, {"den", e.den()}, {"coeff", c.get_str()}});
    }
    return json{{"terms", std::move(terms)}, {"cutoff", s.cutoff() ? to_json(*s.cutoff()) : json(nullptr)}};
}

QSeries series_from_json(const json& j)
{
    std::optional<QExp> cutoff;
    if (!j.at("cutoff").is_null()) {
        cutoff = qexp_from_json(j.at("cutoff"));
    }
    QSeries::Terms terms;
    std::optional<QExp> prev;
    for (const auto& t : j.at("terms")) {
        const QExp e = qexp_from_json(t);
        Coeff c;
        if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) {
            throw std::invalid_argument("bad coefficient string");
        }
        if (c == 0) {
            throw std::invalid_argument("zero coefficient stored");
        }
        if (prev && e <= *prev) {
            throw std::invalid_argument("terms not strictly ascending");
        }
        if (cutoff && e >= *cutoff) {
            throw std::invalid_argument("term at or above cutoff");
        }
        prev = e;
        terms.emplace(e, std::move(c));
    }
    return QSeries(std::move(terms), cutoff);
}

json to_json(const QZChar& c)
{
    json comps = json::array();
    for (const auto& [alpha, s] : c.components()) {
        comps.push_back(json{{"alpha", alpha}, {"series", to_json(s)}});
    }
    return json{{"components", std::move(comps)}};
}

QZChar qzchar_from_json(const json& j)
{
    QZChar::Components comps;
    for (const auto& item : j.at("components")) {
        comps.emplace(item.at("alpha").get<std::int64_t>(), series_from_json(item.at("series")));
    }
    return QZChar(std::move(comps));
}

} // namespace qlab
