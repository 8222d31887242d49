#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "lbhopf/forest.hpp"

using namespace lbhopf;
using testing::F;

namespace {

// Catalan numbers by the convolution recursion, independent of enumeration.
std::uint64_t catalan(int n) {
    static std::map<int, std::uint64_t> memo;
    if (n == 0) return 1;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::uint64_t s = 0;
    for (int i = 0; i < n; ++i) s += catalan(i) * catalan(n - 1 - i);
    return memo[n] = s;
}

std::uint64_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Π over nodes (and over the forest's top level) of (number of children)!.
std::uint64_t arrangements(const Forest& f) {
    std::uint64_t p = factorial(f.length());
    for (const Tree& t : f.trees()) p *= arrangements(t.children());
    return p;
}

}  // namespace

TEST_CASE("parse examples") {
    CHECK(F("").empty());
    CHECK(F("").degree() == 0);
    const Forest t = F("o[o o]");
    CHECK(t.degree() == 3);
    CHECK(t.length() == 1);
    const Forest f = F("o o[o]");
    CHECK(f.degree() == 3);
    CHECK(f.length() == 2);
}

TEST_CASE("parse is whitespace tolerant between siblings") {
    CHECK(F("  o   o[ o  o ]  ") == F("o o[o o]"));
    CHECK(to_string(F(" o[o    o]")) == "o[o o]");
}

TEST_CASE("parse errors report byte offsets") {
    try {
        parse_forest("o[o");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        // Points at the bracket that was never closed.
        CHECK(e.offset() == 1);
    }
    try {
        parse_forest("o x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        parse_forest("o]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(parse_forest("x"), ParseError);
    CHECK_THROWS_AS(parse_forest("[o]"), ParseError);
    CHECK_NOTHROW(parse_forest("x[o]", ColorSet({"o", "x"})));
}

TEST_CASE("print and parse round trip on every forest up to degree 5") {
    const ColorSet two({"o", "x"});
    for (std::size_t n = 0; n <= 5; ++n) {
        for (const Forest& f : enumerate_forests(n)) CHECK(parse_forest(to_string(f)) == f);
    }
    for (std::size_t n = 0; n <= 3; ++n)
        for (const Forest& f : enumerate_forests(n, two)) CHECK(parse_forest(to_string(f, two), two) == f);
}

TEST_CASE("grading is additive under concatenation") {
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; a + b <= 5; ++b)
            for (const Forest& x : enumerate_forests(a))
                for (const Forest& y : enumerate_forests(b)) {
                    const Forest xy = concat(x, y);
                    CHECK(xy.degree() == x.degree() + y.degree());
                    CHECK(xy.length() == x.length() + y.length());
                }
}

TEST_CASE("enumeration counts follow Catalan numbers") {
    for (int n = 0; n <= 7; ++n) CHECK(enumerate_forests(static_cast<std::size_t>(n)).size() == catalan(n));
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_trees(static_cast<std::size_t>(n)).size() == catalan(n - 1));
    // With c colors every node picks a color independently.
    const ColorSet two({"o", "x"});
    for (int n = 0; n <= 5; ++n)
        CHECK(enumerate_forests(static_cast<std::size_t>(n), two).size() == catalan(n) * (std::uint64_t{1} << n));
}

TEST_CASE("enumeration is sorted, distinct and of the requested degree") {
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto fs = enumerate_forests(n);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            CHECK(fs[i].degree() == n);
            if (i > 0) CHECK(fs[i - 1] < fs[i]);
        }
    }
    const auto three = enumerate_forests(3);
    std::vector<std::string> text;
    for (const Forest& f : three) text.push_back(to_string(f));
    CHECK(text == std::vector<std::string>{"o o o", "o o[o]", "o[o] o", "o[o o]", "o[o[o]]"});
}

TEST_CASE("symmetrize examples") {
    CHECK(symmetrize(Forest()) == LinComb<Forest>(Forest()));
    CHECK(symmetrize(F("o o")) == LinComb<Forest>(F("o o"), Rational(2)));
    CHECK(symmetrize(F("o[o[o] o]")) == LinComb<Forest>(F("o[o[o] o]")) + LinComb<Forest>(F("o[o o[o]]")));
}

TEST_CASE("equivalence") {
    CHECK(equivalent(F("o[o o[o]]"), F("o[o[o] o]")));
    CHECK(equivalent(F("o o[o]"), F("o[o] o")));
    CHECK_FALSE(equivalent(F("o[o[o]]"), F("o[o o]")));
}

TEST_CASE("symmetrization is constant on equivalence classes") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::map<Forest, LinComb<Forest>> by_class;
        for (const Forest& f : enumerate_forests(n)) {
            const Forest key = canonical_nonplanar(f);
            auto [it, fresh] = by_class.emplace(key, symmetrize(f));
            if (!fresh) CHECK(it->second == symmetrize(f));
        }
    }
}

TEST_CASE("sigma examples") {
    CHECK(sigma(F("o")) == 1);
    CHECK(sigma(F("o[o o]")) == 2);
    CHECK(sigma(F("o[o[o]]")) == 1);
    CHECK(sigma(F("o o")) == 2);
    CHECK(sigma(F("o[o[o] o[o]]")) == 2);
    CHECK(sigma(F("o[o o o]")) == 6);
}

TEST_CASE("sigma times class size equals the arrangement count") {
    // Counting planar representatives of each class by brute force: the
    // orbit-stabilizer theorem gives |class|·σ = Π (children count)!.
    for (std::size_t n = 1; n <= 6; ++n) {
        std::map<Forest, std::uint64_t> class_size;
        const auto fs = enumerate_forests(n);
        for (const Forest& f : fs) ++class_size[canonical_nonplanar(f)];
        for (const Forest& f : fs) CHECK(sigma(f) * class_size[canonical_nonplanar(f)] == arrangements(f));
    }
}

TEST_CASE("symmetrize coefficients match the orbit count") {
    // Ω(ω) spreads Π k! arrangements over the class, so every representative
    // gets coefficient σ and the coefficients sum to Π k!.
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Forest& f : enumerate_forests(n)) {
            const auto s = symmetrize(f);
            CHECK(s.coefficient_sum() == Rational(static_cast<long>(arrangements(f))));
            for (const auto& [g, c] : s) {
                CHECK(equivalent(f, g));
                CHECK(c == Rational(static_cast<long>(sigma(f))));
            }
        }
}

TEST_CASE("json encoding") {
    const Forest f = F("o[o o[o]] o");
    const auto j = to_json(f);
    CHECK(j.dump() == "[[0,[[0,[]],[0,[[0,[]]]]]],[0,[]]]");
    CHECK(forest_from_json(j) == f);
    CHECK_THROWS(forest_from_json(nlohmann::json::parse("[[1,[]]]")));
}

TEST_CASE("colors") {
    const ColorSet cs = ColorSet::parse_list("o,x");
    CHECK(cs.size() == 2);
    CHECK(cs.find("x") == ColorId{1});
    CHECK_THROWS(ColorSet::parse_list("o,o"));
    const Forest f = parse_forest("x[o] o", cs);
    CHECK(to_string(f, cs) == "x[o] o");
    CHECK(f.tree(0).root() == 1);
}

TEST_CASE("tree construction") {
    const Tree t(0, F("o o"));
    CHECK(to_string(t) == "o[o o]");
    CHECK(t.children() == F("o o"));
    CHECK(Tree::leaf().as_forest() == F("o"));
    CHECK_THROWS(Tree::from_forest(F("o o")));
}
