#include <random>

#include "doctest.h"
#include "support.hpp"

#include "lbhopf/lincomb.hpp"
#include "lbhopf/word.hpp"
#include "lbhopf/wordhopf.hpp"

using namespace lbhopf;
using testing::F;
using testing::Q;

namespace {

LinComb<Forest> random_poly(std::mt19937& rng, int max_degree) {
    LinComb<Forest> p;
    for (int n = 0; n <= max_degree; ++n)
        for (const Forest& f : enumerate_forests(static_cast<std::size_t>(n)))
            if (rng() % 3 == 0) p.add(f, testing::random_rational(rng));
    return p;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(Q("2/4") == Rational(1, 2));
    CHECK(Q("-3/6").str() == "-1/2");
    CHECK(Rational(4, -2).str() == "-2");
    CHECK(Q("0/5").is_zero());
    CHECK_THROWS(Q("1/0"));
    CHECK_THROWS(Q("abc"));
    CHECK(Rational::factorial(20).str() == "2432902008176640000");
    CHECK(Rational::factorial(25).str() == "15511210043330985984000000");
}

TEST_CASE("no stored zero coefficients") {
    LinComb<Forest> p(F("o"), Q("1/3"));
    p.add(F("o"), Q("-1/3"));
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
    p.add(F("o o"), Rational(0));
    CHECK(p.is_zero());
}

TEST_CASE("exact arithmetic on random combinations") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_poly(rng, 4);
        const auto b = random_poly(rng, 4);
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK(Q("3/7") * (a + b) == Q("3/7") * a + Q("3/7") * b);
        CHECK(a - a == LinComb<Forest>());
    }
}

TEST_CASE("pairing") {
    const auto delta = GradedSeries<Forest>::delta(3);
    CHECK(pairing(delta, LinComb<Forest>(Forest())) == Rational(1));
    GradedSeries<Forest> a(3);
    a.set(F("o"), Q("1/2"));
    CHECK(pairing(a, LinComb<Forest>()) == Rational(0));
    CHECK(pairing(a, LinComb<Forest>(F("o"), Rational(4))) == Rational(2));
    CHECK_THROWS_AS(pairing(a, LinComb<Forest>(F("o o o o"))), TruncationError);
}

TEST_CASE("series truncation is explicit") {
    GradedSeries<Forest> a(2);
    CHECK_THROWS_AS(a.set(F("o o o"), Rational(1)), TruncationError);
    CHECK_THROWS_AS(a(F("o[o o]")), TruncationError);
    CHECK(a(F("o o")) == Rational(0));
    GradedSeries<Forest> b(4);
    b.set(F("o[o o o]"), Rational(1));
    b.set(F("o"), Rational(2));
    const auto s = a + b;
    CHECK(s.trunc() == 2);
    CHECK(s(F("o")) == Rational(2));
}

TEST_CASE("grading operator") {
    const auto Y = grading_operator<Forest>(4, forest_basis());
    CHECK(Y(Forest()).is_zero());
    CHECK(Y(F("o")) == LinComb<Forest>(F("o")));
    CHECK(Y(F("o o[o]")) == LinComb<Forest>(F("o o[o]"), Rational(3)));
    const auto Yinv = inverse_grading_operator<Forest>(4, forest_basis());
    CHECK(compose(Y, Yinv)(F("o[o] o")) == LinComb<Forest>(F("o[o] o")));
}

TEST_CASE("endomorphism composition is associative") {
    const auto h = shuffle_ot();
    const int n = 4;
    const auto S = antipode_endo(h, n);
    const auto Y = grading_operator(h, n);
    const auto D = dynkin(h, n);
    CHECK(compose(compose(S, Y), D) == compose(S, compose(Y, D)));
    CHECK(compose(Y, S) == compose(S, Y));
}

TEST_CASE("grading commutes with the word antipode up to degree 5") {
    const Alphabet al({"a", "b"});
    const ShuffleHopf<Word> h{word_basis(al)};
    const auto S = antipode_endo(h, 5);
    const auto Y = grading_operator(h, 5);
    CHECK(compose(Y, S) == compose(S, Y));
}

TEST_CASE("text formatting") {
    LinComb<Forest> p;
    p.add(F("o"), Rational(2));
    p.add(F("o o"), Q("-1/2"));
    p.add(F("o[o o]"), Rational(1));
    CHECK(format_forests(p) == "2 o - 1/2 (o o) + o[o o]");
    CHECK(format_forests(LinComb<Forest>()) == "0");
    CHECK(format_forests(LinComb<Forest>(Forest())) == "1");
    TensorComb<Forest> t;
    t.add({F("o o"), F("o")}, Rational(2));
    t.add({F("o"), Forest()}, Rational(1));
    CHECK(format_tensor(t, [](const Forest& f) { return to_string(f); }) == "o ⊗ 1 + 2 (o o) ⊗ o");
}
