#ifndef PENDPOND_SERIES_JSON_HPP
#define PENDPOND_SERIES_JSON_HPP

// {"order": N, "ring": "int" | "rat" | "mod:<m>", "coeffs": ["...", ...]}
// Coefficients are decimal strings so that nothing passes through a double.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "series.hpp"

namespace pendpond {

template <class Ring>
nlohmann::json to_json(const Series<Ring>& s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(s.ring().to_string(c));
    return {{"order", s.order()}, {"ring", s.ring().tag()}, {"coeffs", std::move(coeffs)}};
}

template <class Ring>
Series<Ring> series_from_json(const nlohmann::json& j, const Ring& ring)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("ring") || !j.contains("coeffs"))
        throw parse_error("series JSON needs order, ring and coeffs");
    if (j.at("ring").get<std::string>() != ring.tag())
        throw ring_mismatch("series JSON is over " + j.at("ring").get<std::string>() +
                            ", expected " + ring.tag());
    const auto& arr = j.at("coeffs");
    auto order = j.at("order").get<std::size_t>();
    if (!arr.is_array() || arr.size() != order + 1)
        throw parse_error("series JSON coefficient count does not match order");
    std::vector<typename Ring::value_type> c;
    c.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string())
            throw parse_error("series coefficients must be decimal strings");
        c.push_back(ring.parse(v.get<std::string>()));
    }
    return Series<Ring>(ring, std::move(c));
}

using AnySeries = std::variant<Series<IntegerRing>, Series<RationalRing>, Series<ModRing>>;

inline AnySeries any_series_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("ring"))
        throw parse_error("series JSON needs a ring tag");
    return std::visit(
        [&](const auto& ring) -> AnySeries { return series_from_json(j, ring); },
        parse_ring(j.at("ring").get<std::string>()));
}

} // namespace pendpond

#endif
