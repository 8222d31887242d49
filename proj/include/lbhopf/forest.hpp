#ifndef LBHOPF_FOREST_HPP
#define LBHOPF_FOREST_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "lbhopf/lincomb.hpp"

namespace lbhopf {

using ColorId = std::uint8_t;

// Node decorations. Labels are unique printable tokens without whitespace or
// brackets. The default set is the single color "o".
class ColorSet {
public:
    static constexpr std::size_t max_colors = 254;

    ColorSet() : labels_{"o"} {}
    explicit ColorSet(std::vector<std::string> labels);
    // Comma separated labels, e.g. "o,x".
    static ColorSet parse_list(std::string_view text);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(ColorId id) const { return labels_.at(id); }
    std::optional<ColorId> find(std::string_view label) const;
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const ColorSet&, const ColorSet&) = default;

private:
    std::vector<std::string> labels_;
};

class Tree;

// A word of planar decorated rooted trees. Stored as a bracket code: each node
// contributes an opening byte (color + 1) followed by its children and a
// closing zero byte. Concatenation of forests is concatenation of codes.
//
// Forests are ordered by node count, then lexicographically by code. This is
// the canonical order used for enumeration and for all printed output.
class Forest {
public:
    Forest() = default;

    // Throws std::invalid_argument on a malformed code.
    static Forest from_code(std::string code);

    std::size_t degree() const { return code_.size() / 2; }
    // Number of trees, #(ω).
    std::size_t length() const;
    bool empty() const { return code_.empty(); }

    std::vector<Tree> trees() const;
    Tree tree(std::size_t i) const;
    // Trees [first, last) as a forest.
    Forest slice(std::size_t first, std::size_t last) const;
    Forest reversed() const;

    const std::string& code() const { return code_; }

    friend Forest concat(const Forest& a, const Forest& b) {
        Forest f;
        f.code_ = a.code_ + b.code_;
        return f;
    }
    friend bool operator==(const Forest&, const Forest&) = default;
    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
        if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
        int r = a.code_.compare(b.code_);
        return r < 0 ? std::strong_ordering::less : r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    friend class Tree;
    std::vector<std::size_t> tree_offsets() const;
    std::string code_;
};

// A single planar tree, B⁺_c(children).
class Tree {
public:
    Tree(ColorId root, const Forest& children);
    static Tree leaf(ColorId c = 0) { return Tree(c, Forest()); }
    // Throws std::invalid_argument unless f has exactly one tree.
    static Tree from_forest(const Forest& f);

    ColorId root() const { return static_cast<ColorId>(static_cast<unsigned char>(f_.code_.front()) - 1); }
    Forest children() const;
    std::size_t degree() const { return f_.degree(); }
    const Forest& as_forest() const { return f_; }
    operator const Forest&() const { return f_; }

    friend bool operator==(const Tree&, const Tree&) = default;
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) { return a.f_ <=> b.f_; }

private:
    friend class Forest;
    Tree() = default;
    Forest f_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Grammar: forest := ε | tree (" " tree)* ; tree := label [ "[" forest "]" ].
Forest parse_forest(std::string_view text, const ColorSet& colors = ColorSet());
Tree parse_tree(std::string_view text, const ColorSet& colors = ColorSet());

std::string to_string(const Forest& f, const ColorSet& colors = ColorSet());
std::string to_string(const Tree& t, const ColorSet& colors = ColorSet());

// Trees as [colorId, [children...]], forests as arrays of trees.
nlohmann::json to_json(const Forest& f);
Forest forest_from_json(const nlohmann::json& j, const ColorSet& colors = ColorSet());

// All forests with n nodes, each once, in canonical order.
std::vector<Forest> enumerate_forests(std::size_t n, const ColorSet& colors = ColorSet());
std::vector<Tree> enumerate_trees(std::size_t n, const ColorSet& colors = ColorSet());
BasisFn<Forest> forest_basis(const ColorSet& colors = ColorSet());

// Ω: recursive symmetrization over branch and tree orderings.
LinComb<Forest> symmetrize(const Forest& f);
// ω₁ ∼ ω₂ iff Ω(ω₁) = Ω(ω₂).
bool equivalent(const Forest& a, const Forest& b);
// Representative of the non-planar class: branches and trees sorted by code.
Forest canonical_nonplanar(const Forest& f);
// Symmetry factor of the underlying non-planar forest.
std::uint64_t sigma(const Forest& f);

// "2 o[o] - 1/2 (o o)", terms in canonical order.
std::string format_forests(const LinComb<Forest>& p, const ColorSet& colors = ColorSet());

}  // namespace lbhopf

#endif
