#ifndef LBHOPF_TEST_SUPPORT_HPP
#define LBHOPF_TEST_SUPPORT_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lbhopf/forest.hpp"
#include "lbhopf/hn.hpp"
#include "lbhopf/lincomb.hpp"
#include "lbhopf/rational.hpp"
#include "lbhopf/wordhopf.hpp"

namespace testing {

using lbhopf::Forest;
using lbhopf::ForestSeries;
using lbhopf::Rational;

// One Dyck word "a…b" per tree, trees separated by spaces; "" is the empty
// forest. Converted to bracket text so the fixture does not depend on the
// library's internal encoding.
inline std::string dyck_tree_text(std::string_view w, std::size_t& pos) {
    if (pos >= w.size() || w[pos] != 'a') throw std::invalid_argument("dyck: expected 'a'");
    ++pos;
    std::string children;
    while (pos < w.size() && w[pos] == 'a') {
        if (!children.empty()) children += ' ';
        children += dyck_tree_text(w, pos);
    }
    if (pos >= w.size() || w[pos] != 'b') throw std::invalid_argument("dyck: expected 'b'");
    ++pos;
    return children.empty() ? "o" : "o[" + children + "]";
}

inline Forest dyck(std::string_view text) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find(' ', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view word = text.substr(start, end - start);
        std::size_t pos = 0;
        const std::string tree = dyck_tree_text(word, pos);
        if (pos != word.size()) throw std::invalid_argument("dyck: one tree per word");
        if (!out.empty()) out += ' ';
        out += tree;
        start = end + 1;
    }
    return lbhopf::parse_forest(out);
}

inline Forest F(std::string_view text) { return lbhopf::parse_forest(text); }
inline Rational Q(std::string_view text) { return Rational::parse(text); }

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng), den(rng));
}

// Random values on every forest of degree 1..trunc.
inline ForestSeries random_series(std::mt19937& rng, int trunc) {
    ForestSeries s(trunc);
    for (int n = 1; n <= trunc; ++n)
        for (const Forest& f : lbhopf::enumerate_forests(static_cast<std::size_t>(n))) s.set(f, random_rational(rng));
    return s;
}

// α∘Y⁻¹D for random α; Y⁻¹D projects onto primitives, so the result vanishes
// on proper shuffles.
inline ForestSeries random_inf_character(std::mt19937& rng, int trunc) {
    const auto h = lbhopf::shuffle_ot();
    return lbhopf::compose(random_series(rng, trunc), lbhopf::dynkin_idempotent(h, trunc));
}

}  // namespace testing

#endif
