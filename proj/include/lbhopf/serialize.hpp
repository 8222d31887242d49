#ifndef LBHOPF_SERIALIZE_HPP
#define LBHOPF_SERIALIZE_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "lbhopf/forest.hpp"
#include "lbhopf/lbseries.hpp"

namespace lbhopf {

// Series: {"trunc": N, "type": "type3", "colors": ["o"], "terms": [[forest, "p/q"], ...]}.
// "type" and "colors" are optional on input; terms come out in canonical order.
nlohmann::json series_to_json(const ForestSeries& s, const ColorSet& colors = ColorSet(),
                              std::optional<SeriesKind> kind = std::nullopt);
nlohmann::json series_to_json(const LBSeries& s);

struct SeriesDocument {
    ForestSeries series;
    ColorSet colors;
    std::optional<SeriesKind> kind;
};
SeriesDocument series_from_json(const nlohmann::json& j);
// Requires a "type" field unless fallback is given.
LBSeries lbseries_from_json(const nlohmann::json& j, std::optional<SeriesKind> fallback = std::nullopt);

// Tensors: {"terms": [[left, right, "p/q"], ...]}.
nlohmann::json tensor_to_json(const TensorComb<Forest>& t, const ColorSet& colors = ColorSet());
TensorComb<Forest> tensor_from_json(const nlohmann::json& j, const ColorSet& colors = ColorSet());

// Polynomials: [[forest, "p/q"], ...].
nlohmann::json poly_to_json(const DPoly& p, const ColorSet& colors = ColorSet());
DPoly poly_from_json(const nlohmann::json& j, const ColorSet& colors = ColorSet());

// Substitution maps: {"o": [[forest, "p/q"], ...], ...}.
SubstitutionMap substitution_from_json(const nlohmann::json& j, const ColorSet& colors = ColorSet());

}  // namespace lbhopf

#endif
