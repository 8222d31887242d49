#include <algorithm>
#include <fstream>
#include <random>

#include "doctest.h"
#include "support.hpp"

#include "lbhopf/grafting.hpp"
#include "lbhopf/hn.hpp"
#include "lbhopf/lbseries.hpp"
#include "lbhopf/serialize.hpp"

using namespace lbhopf;
using testing::dyck;
using testing::F;
using testing::Q;

namespace {

LBSeries random_type3(std::mt19937& rng, int n) {
    return LBSeries(SeriesKind::Type3, testing::random_inf_character(rng, n));
}

LBSeries zero_type3(int n) { return LBSeries(SeriesKind::Type3, ForestSeries(n)); }

// τ! = |τ| · Π children's factorials
Rational tree_factorial(const Tree& t) {
    Rational r(static_cast<long>(t.degree()));
    for (const Tree& c : t.children().trees()) r *= tree_factorial(c);
    return r;
}

Rational kappa_oracle(const std::vector<int>& j) {
    Rational r(1);
    int partial = 0;
    for (int x : j) {
        partial += x;
        r *= Rational(x, partial);
    }
    return r;
}

// Random series supported on single trees only (automatically primitive for
// the shuffle product over OT).
ForestSeries random_tree_series(std::mt19937& rng, int n) {
    ForestSeries s(n);
    for (int d = 1; d <= n; ++d)
        for (const Tree& t : enumerate_trees(static_cast<std::size_t>(d))) s.set(t, testing::random_rational(rng));
    return s;
}

DPoly random_poly(std::mt19937& rng, int max_degree, int terms) {
    std::vector<Forest> pool;
    for (int d = 0; d <= max_degree; ++d)
        for (const Forest& f : enumerate_forests(static_cast<std::size_t>(d))) pool.push_back(f);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    DPoly p;
    for (int i = 0; i < terms; ++i) p.add(pool[pick(rng)], testing::random_rational(rng));
    return p;
}

// A random Lie element of degree ≤ 2 with nonzero o-coefficient.
DPoly random_lie(std::mt19937& rng) {
    ForestSeries g = testing::random_inf_character(rng, 2);
    g.set(F("o"), Rational(1) + g(F("o")) * g(F("o")));
    return g.to_lincomb();
}

}  // namespace

TEST_CASE("series invariants are checked on construction") {
    ForestSeries not_char(2);
    not_char.set(Forest(), Rational(1));
    not_char.set(F("o"), Rational(1));
    CHECK_THROWS_AS(LBSeries(SeriesKind::Type1, not_char), InvariantError);

    ForestSeries not_inf(2);
    not_inf.set(F("o o"), Rational(1));
    CHECK_THROWS_AS(LBSeries(SeriesKind::Type3, not_inf), InvariantError);
    CHECK_THROWS_AS(LBSeries(SeriesKind::Type2, not_inf), InvariantError);

    ForestSeries constant(2);
    constant.set(Forest(), Rational(1));
    CHECK_THROWS_AS(LBSeries(SeriesKind::Type3, constant), InvariantError);
    CHECK_NOTHROW(LBSeries(SeriesKind::Type1, ForestSeries::delta(3)));

    CHECK(parse_series_kind("type2") == SeriesKind::Type2);
    CHECK(parse_series_kind("3") == SeriesKind::Type3);
    CHECK_THROWS_AS(parse_series_kind("type4"), std::invalid_argument);
}

TEST_CASE("conversion examples") {
    const LBSeries a = to_type1(euler_method_series(4));
    CHECK(a.kind() == SeriesKind::Type1);
    CHECK(a(Forest()) == Rational(1));
    CHECK(a(F("o")) == Rational(1));
    CHECK(a(F("o o")) == Q("1/2"));
    CHECK(a(F("o[o]")) == Rational(0));
    CHECK(a(F("o o o")) == Q("1/6"));

    ForestSeries b(3);
    b.set(F("o"), Rational(1));
    const LBSeries e = to_type1(LBSeries(SeriesKind::Type2, b));
    CHECK(e(F("o[o]")) == Q("1/2"));
    CHECK(e(F("o o")) == Q("1/2"));
}

TEST_CASE("conversions are idempotent and round trip") {
    std::mt19937 rng(31);
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < 4; ++i) {
            const LBSeries g = random_type3(rng, n);
            const LBSeries a = to_type1(g);
            const LBSeries b = to_type2(g);
            CHECK(to_type3(a) == g);
            CHECK(to_type1(b) == a);
            CHECK(to_type2(a) == b);
            CHECK(to_type3(b) == g);
            CHECK(to_type1(a) == a);
            CHECK(to_type2(b) == b);
            CHECK(to_type3(g) == g);
            CHECK(convert(g, SeriesKind::Type2) == b);

            const LBSeries beta(SeriesKind::Type2, testing::random_inf_character(rng, n));
            CHECK(to_type2(LBSeries(SeriesKind::Type1, exp_gl(beta.data()))) == beta);
        }
}

TEST_CASE("exact solution series") {
    std::ifstream in(std::string(LBHOPF_TEST_DATA) + "/exact_series.json");
    REQUIRE(in);
    const auto golden = nlohmann::json::parse(in);
    const LBSeries g = exact_solution(5);
    CHECK(g.kind() == SeriesKind::Type3);

    ForestSeries expected(5);
    for (const auto& row : golden) expected.set(dyck(row[0].get<std::string>()), Q(row[1].get<std::string>()));
    CHECK(golden.size() == 23);
    CHECK(g.data() == expected);

    CHECK(g(F("o")) == Rational(1));
    CHECK(g(F("o[o]")) == Q("1/2"));
    CHECK(g(F("o[o o]")) == Q("1/6"));
    CHECK(g(F("o[o[o]]")) == Q("1/6"));
    CHECK(g(F("o[o o[o]]")) == Q("2/24"));

    for (int n = 1; n <= 5; ++n)
        for (const Forest& f : enumerate_forests(static_cast<std::size_t>(n)))
            if (f.length() != 1) CHECK(g(f) == Rational(0));

    // Lower truncations are prefixes.
    CHECK(exact_solution(3).data() == g.data().truncated(3));
    CHECK_THROWS_AS(exact_solution(0), std::invalid_argument);
}

TEST_CASE("exact solution pushed to non-planar trees is 1/tree factorial") {
    const LBSeries g = exact_solution(4);
    const auto classical = classical_coefficients(g.data());
    for (int n = 1; n <= 4; ++n)
        for (const Tree& t : enumerate_trees(static_cast<std::size_t>(n))) {
            const Forest key = canonical_nonplanar(t.as_forest());
            INFO(to_string(key));
            CHECK(classical.at(key) == Rational(1) / tree_factorial(t));
        }
    for (const auto& [key, v] : classical)
        if (key.length() != 1) CHECK(v == Rational(0));
}

TEST_CASE("euler method series") {
    const LBSeries g = euler_method_series(3);
    CHECK(g(F("o")) == Rational(1));
    for (int n = 2; n <= 3; ++n)
        for (const Forest& f : enumerate_forests(static_cast<std::size_t>(n))) CHECK(g(f) == Rational(0));
    CHECK(to_type1(g)(F("o o")) == Q("1/2"));
}

TEST_CASE("Q in product form after symmetrization") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 5; ++rep) {
        const ForestSeries a = random_tree_series(rng, 4);
        const ForestSeries q = q_ot(a);
        for (int n = 1; n <= 4; ++n)
            for (const Forest& f : enumerate_forests(static_cast<std::size_t>(n))) {
                const std::vector<Tree> trees = f.trees();
                Rational prod(1);
                std::vector<int> degrees;
                for (const Tree& t : trees) {
                    prod *= a(t.as_forest());
                    degrees.push_back(static_cast<int>(t.degree()));
                }
                CHECK(q(f) == kappa_oracle(degrees) * prod);

                // Sum over all k! orderings of the trees.
                std::vector<std::size_t> idx(trees.size());
                for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                Rational sum;
                do {
                    Forest perm;
                    for (std::size_t i : idx) perm = concat(perm, trees[i].as_forest());
                    sum += q(perm);
                } while (std::next_permutation(idx.begin(), idx.end()));
                CHECK(sum == prod);
            }
    }
}

TEST_CASE("composition") {
    std::mt19937 rng(8);
    const LBSeries e = euler_method_series(3);
    CHECK(compose_type3(e, zero_type3(3)) == e);
    CHECK(compose_type3(zero_type3(3), e) == e);
    CHECK(to_type1(compose_type3(e, e))(F("o")) == Rational(2));

    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < 3; ++i) {
            const LBSeries a = random_type3(rng, n), b = random_type3(rng, n), c = random_type3(rng, n);
            CHECK(compose_type3(compose_type3(a, b), c) == compose_type3(a, compose_type3(b, c)));
            CHECK(to_type1(compose_type3(a, b)).data() == gl_convolve(to_type1(a).data(), to_type1(b).data()));
        }

    CHECK_THROWS_AS(compose_type3(e, euler_method_series(2)), TruncationError);
    CHECK_THROWS_AS(compose_type3(to_type1(e), e), std::invalid_argument);
}

TEST_CASE("inverse") {
    std::mt19937 rng(9);
    CHECK(inverse_type3(zero_type3(4)) == zero_type3(4));
    const LBSeries e = euler_method_series(4);
    CHECK(gl_convolve(q_ot(e.data()), q_ot(inverse_type3(e).data())) == ForestSeries::delta(4));
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < 3; ++i) {
            const LBSeries g = random_type3(rng, n);
            const LBSeries inv = inverse_type3(g);
            CHECK(gl_convolve(q_ot(g.data()), q_ot(inv.data())) == ForestSeries::delta(n));
            CHECK(gl_convolve(q_ot(inv.data()), q_ot(g.data())) == ForestSeries::delta(n));
            CHECK(inverse_type3(inv) == g);
            CHECK(compose_type3(g, inv) == zero_type3(n));
        }
}

TEST_CASE("backward error") {
    std::mt19937 rng(10);
    CHECK(backward_error(zero_type3(3)).data().is_zero());
    const LBSeries be = backward_error(euler_method_series(3));
    CHECK(be.kind() == SeriesKind::Type2);
    CHECK(be(F("o")) == Rational(1));
    CHECK(be(F("o[o]")) == Q("-1/2"));
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < 3; ++i) {
            const LBSeries g = random_type3(rng, n);
            const LBSeries b = backward_error(g);
            CHECK(exp_gl(b.data()) == q_ot(g.data()));
            CHECK(log_gl(q_ot(g.data())) == b.data());
            CHECK(b == to_type2(g));
        }
    CHECK_THROWS_AS(backward_error(to_type1(euler_method_series(2))), std::invalid_argument);
}

TEST_CASE("substitution examples") {
    const Substitution id(SubstitutionMap{});
    for (int n = 0; n <= 4; ++n)
        for (const Forest& f : enumerate_forests(static_cast<std::size_t>(n))) CHECK(id(f) == DPoly(f));

    const Substitution twice(SubstitutionMap{{0, Rational(2) * DPoly(F("o"))}});
    CHECK(twice(F("o[o]")) == Rational(4) * DPoly(F("o[o]")));
    CHECK(twice(F("o o[o]")) == Rational(8) * DPoly(F("o o[o]")));
    CHECK(twice(Forest()) == DPoly(Forest()));

    // a(o) = o + o[o]: the tree o[o] becomes (o + o[o])[o + o[o]].
    const DPoly lie = DPoly(F("o")) + DPoly(F("o[o]"));
    const Substitution s(SubstitutionMap{{0, lie}});
    CHECK(s(F("o[o]")) == left_graft(lie, lie));
    CHECK(s.apply_truncated(DPoly(F("o[o]")), 3) ==
          DPoly(F("o[o]")) + Rational(2) * DPoly(F("o[o[o]]")) + DPoly(F("o[o o]")));

    CHECK(is_lie_element(DPoly(F("o o[o]")) - DPoly(F("o[o] o"))));
    CHECK_FALSE(is_lie_element(DPoly(F("o o"))));
    CHECK_FALSE(is_lie_element(DPoly(Forest())));
    CHECK_THROWS_AS(Substitution(SubstitutionMap{{0, DPoly(F("o o"))}}), std::invalid_argument);
    CHECK_THROWS_AS(Substitution(SubstitutionMap{{3, DPoly(F("o"))}}), std::invalid_argument);
}

TEST_CASE("substitution is a D-algebra homomorphism") {
    std::mt19937 rng(12);
    for (int rep = 0; rep < 10; ++rep) {
        const Substitution s(SubstitutionMap{{0, random_lie(rng)}});
        const DPoly p = random_poly(rng, 3, 4);
        const DPoly q = random_poly(rng, 3, 4);
        CHECK(s(concat(p, q)) == concat(s(p), s(q)));
        CHECK(s(left_graft(p, q)) == left_graft(s(p), s(q)));
        CHECK(s(gl_product(p, q)) == gl_product(s(p), s(q)));

        DPoly full = s(p);
        DPoly cut;
        for (const auto& [f, c] : full)
            if (f.degree() <= 3) cut.add(f, c);
        CHECK(s.apply_truncated(p, 3) == cut);
    }
}
