#include "lbhopf/serialize.hpp"

#include <stdexcept>

namespace lbhopf {

namespace {

Rational coeff_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("coefficient must be a \"p/q\" string or an integer");
}

const nlohmann::json& terms_of(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw std::invalid_argument("expected an object with a \"terms\" array");
    return j.at("terms");
}

}  // namespace

nlohmann::json series_to_json(const ForestSeries& s, const ColorSet& colors, std::optional<SeriesKind> kind) {
    nlohmann::json j;
    j["trunc"] = s.trunc();
    if (kind) j["type"] = to_string(*kind);
    if (!(colors == ColorSet())) j["colors"] = colors.labels();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [f, c] : s.coeffs()) terms.push_back({to_string(f, colors), c.str()});
    j["terms"] = terms;
    return j;
}

nlohmann::json series_to_json(const LBSeries& s) { return series_to_json(s.data(), s.colors(), s.kind()); }

SeriesDocument series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("trunc") || !j.at("trunc").is_number_integer())
        throw std::invalid_argument("series JSON needs an integer \"trunc\"");
    ColorSet colors;
    if (j.contains("colors")) colors = ColorSet(j.at("colors").get<std::vector<std::string>>());
    std::optional<SeriesKind> kind;
    if (j.contains("type")) kind = parse_series_kind(j.at("type").get<std::string>());
    ForestSeries s(j.at("trunc").get<int>());
    for (const auto& t : terms_of(j)) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string())
            throw std::invalid_argument("series term must be [forest, coefficient]");
        s.add(parse_forest(t[0].get<std::string>(), colors), coeff_from_json(t[1]));
    }
    return {s, colors, kind};
}

LBSeries lbseries_from_json(const nlohmann::json& j, std::optional<SeriesKind> fallback) {
    SeriesDocument doc = series_from_json(j);
    std::optional<SeriesKind> kind = doc.kind ? doc.kind : fallback;
    if (!kind) throw std::invalid_argument("series JSON has no \"type\" field");
    return LBSeries(*kind, doc.series, doc.colors);
}

nlohmann::json tensor_to_json(const TensorComb<Forest>& t, const ColorSet& colors) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lr, c] : t) terms.push_back({to_string(lr.first, colors), to_string(lr.second, colors), c.str()});
    return nlohmann::json{{"terms", terms}};
}

TensorComb<Forest> tensor_from_json(const nlohmann::json& j, const ColorSet& colors) {
    TensorComb<Forest> out;
    for (const auto& t : terms_of(j)) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string())
            throw std::invalid_argument("tensor term must be [left, right, coefficient]");
        out.add({parse_forest(t[0].get<std::string>(), colors), parse_forest(t[1].get<std::string>(), colors)},
                coeff_from_json(t[2]));
    }
    return out;
}

nlohmann::json poly_to_json(const DPoly& p, const ColorSet& colors) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [f, c] : p) terms.push_back({to_string(f, colors), c.str()});
    return terms;
}

DPoly poly_from_json(const nlohmann::json& j, const ColorSet& colors) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of [forest, coefficient]");
    DPoly out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string())
            throw std::invalid_argument("polynomial term must be [forest, coefficient]");
        out.add(parse_forest(t[0].get<std::string>(), colors), coeff_from_json(t[1]));
    }
    return out;
}

SubstitutionMap substitution_from_json(const nlohmann::json& j, const ColorSet& colors) {
    if (!j.is_object()) throw std::invalid_argument("substitution JSON must map color labels to polynomials");
    SubstitutionMap out;
    for (const auto& [label, poly] : j.items()) {
        auto id = colors.find(label);
        if (!id) throw std::invalid_argument("unknown color label '" + label + "' in substitution");
        out[*id] = poly_from_json(poly, colors);
    }
    return out;
}

}  // namespace lbhopf
