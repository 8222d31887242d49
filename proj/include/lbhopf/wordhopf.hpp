#ifndef LBHOPF_WORDHOPF_HPP
#define LBHOPF_WORDHOPF_HPP

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbhopf/lincomb.hpp"
#include "lbhopf/word_ops.hpp"

namespace lbhopf {

// A graded connected Hopf algebra with a distinguished basis. The empty
// basis element B() is the unit and spans degree 0.
template <class H>
concept HopfStructure = requires(const H& h, const typename H::basis_type& b, int n) {
    { h.product(b, b) } -> std::same_as<LinComb<typename H::basis_type>>;
    { h.coproduct(b) } -> std::same_as<TensorComb<typename H::basis_type>>;
    { h.antipode(b) } -> std::same_as<LinComb<typename H::basis_type>>;
    { h.basis(n) } -> std::same_as<std::vector<typename H::basis_type>>;
    { H::commutative } -> std::convertible_to<bool>;
    { H::name } -> std::convertible_to<const char*>;
};

// Shuffle product with deconcatenation.
template <WordLike W>
struct ShuffleHopf {
    using basis_type = W;
    static constexpr bool commutative = true;
    static constexpr const char* name = "shuffle";

    BasisFn<W> basis_fn;

    LinComb<W> product(const W& a, const W& b) const { return shuffle(a, b); }
    TensorComb<W> coproduct(const W& w) const { return deconcat(w); }
    LinComb<W> antipode(const W& w) const { return antipode_word(w); }
    std::vector<W> basis(int n) const { return basis_fn(n); }
};

// Concatenation product with deshuffle.
template <WordLike W>
struct ConcatHopf {
    using basis_type = W;
    static constexpr bool commutative = false;
    static constexpr const char* name = "concatenation";

    BasisFn<W> basis_fn;

    LinComb<W> product(const W& a, const W& b) const { return LinComb<W>(concat(a, b)); }
    TensorComb<W> coproduct(const W& w) const { return deshuffle(w); }
    LinComb<W> antipode(const W& w) const { return antipode_word(w); }
    std::vector<W> basis(int n) const { return basis_fn(n); }
};

template <HopfStructure H>
using BasisOf = typename H::basis_type;

template <HopfStructure H>
LinComb<BasisOf<H>> multiply(const H& h, const LinComb<BasisOf<H>>& p, const LinComb<BasisOf<H>>& q) {
    return bilinear_extend(p, q, [&h](const auto& a, const auto& b) { return h.product(a, b); });
}

template <HopfStructure H>
TensorComb<BasisOf<H>> comultiply(const H& h, const LinComb<BasisOf<H>>& p) {
    return linear_extend(p, [&h](const auto& b) { return h.coproduct(b); });
}

// (a⊗b)(c⊗d) = ac⊗bd.
template <HopfStructure H>
TensorComb<BasisOf<H>> tensor_multiply(const H& h, const TensorComb<BasisOf<H>>& s, const TensorComb<BasisOf<H>>& t) {
    using B = BasisOf<H>;
    TensorComb<B> out;
    for (const auto& [ab, c1] : s)
        for (const auto& [cd, c2] : t)
            out.add_scaled(tensor(h.product(ab.first, cd.first), h.product(ab.second, cd.second)), c1 * c2);
    return out;
}

// η∘ε as an endomorphism.
template <HopfStructure H>
GradedEndo<BasisOf<H>> counit_endo(const H& h, int trunc) {
    using B = BasisOf<H>;
    GradedEndo<B> e(trunc);
    e.set_image(B(), LinComb<B>(B()));
    (void)h;
    return e;
}

template <HopfStructure H>
GradedEndo<BasisOf<H>> identity_endo(const H& h, int trunc) {
    return identity_endo<BasisOf<H>>(trunc, [&h](int n) { return h.basis(n); });
}

template <HopfStructure H>
GradedEndo<BasisOf<H>> grading_operator(const H& h, int trunc) {
    return grading_operator<BasisOf<H>>(trunc, [&h](int n) { return h.basis(n); });
}

template <HopfStructure H>
GradedEndo<BasisOf<H>> inverse_grading_operator(const H& h, int trunc) {
    return inverse_grading_operator<BasisOf<H>>(trunc, [&h](int n) { return h.basis(n); });
}

// f∗g = μ∘(f⊗g)∘Δ.
template <HopfStructure H>
GradedEndo<BasisOf<H>> convolve(const H& h, const GradedEndo<BasisOf<H>>& f, const GradedEndo<BasisOf<H>>& g) {
    using B = BasisOf<H>;
    if (f.trunc() != g.trunc()) throw TruncationError("convolution of endomorphisms with different truncations");
    GradedEndo<B> out(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n)
        for (const B& b : h.basis(n)) {
            LinComb<B> img;
            for (const auto& [lr, c] : h.coproduct(b)) {
                const LinComb<B> fl = f(lr.first);
                if (fl.is_zero()) continue;
                img.add_scaled(multiply(h, fl, g(lr.second)), c);
            }
            out.set_image(b, std::move(img));
        }
    return out;
}

// (α∗β)(b) = Σ α(b₁)β(b₂).
template <HopfStructure H>
GradedSeries<BasisOf<H>> convolve(const H& h, const GradedSeries<BasisOf<H>>& a, const GradedSeries<BasisOf<H>>& b) {
    using B = BasisOf<H>;
    if (a.trunc() != b.trunc()) throw TruncationError("convolution of series with different truncations");
    GradedSeries<B> out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n)
        for (const B& w : h.basis(n)) {
            Rational s;
            for (const auto& [lr, c] : h.coproduct(w)) {
                const Rational x = a(lr.first);
                if (x.is_zero()) continue;
                s += c * x * b(lr.second);
            }
            out.set(w, s);
        }
    return out;
}

// Unit of the convolution algebra for series (δ) and for endomorphisms (η∘ε).
template <HopfStructure H>
GradedSeries<BasisOf<H>> convolution_unit(const H&, const GradedSeries<BasisOf<H>>& like) {
    return GradedSeries<BasisOf<H>>::delta(like.trunc());
}
template <HopfStructure H>
GradedEndo<BasisOf<H>> convolution_unit(const H& h, const GradedEndo<BasisOf<H>>& like) {
    return counit_endo(h, like.trunc());
}

namespace detail {

template <class B>
LinComb<B> at_unit(const GradedEndo<B>& f) {
    return f(B());
}
template <class B>
LinComb<B> at_unit(const GradedSeries<B>& a) {
    return a(B()).is_zero() ? LinComb<B>() : LinComb<B>(B(), a(B()));
}

// Σ_{n=1}^{N} c_n x^{∗n}; terms vanish above the truncation because x(𝟙) = 0.
template <HopfStructure H, class T, class Coef>
T star_power_series(const H& h, const T& x, int trunc, Coef coef) {
    T out(trunc);
    T power = convolution_unit(h, x);
    for (int n = 1; n <= trunc; ++n) {
        power = convolve(h, power, x);
        out += coef(n) * power;
    }
    return out;
}

}  // namespace detail

// exp∗(α) = Σ α^{∗n}/n!; requires α(𝟙) = 0.
template <HopfStructure H, class T>
T exp_star(const H& h, const T& alpha) {
    if (!detail::at_unit(alpha).is_zero()) throw std::invalid_argument("exp*: argument must vanish on the unit");
    return convolution_unit(h, alpha) +
           detail::star_power_series(h, alpha, alpha.trunc(), [](int n) { return Rational(1) / Rational::factorial(n); });
}

// log∗(β) = Σ (−1)^{n−1}/n (β−δ)^{∗n}; requires β(𝟙) = 1.
template <HopfStructure H, class T>
T log_star(const H& h, const T& beta) {
    using B = BasisOf<H>;
    if (!(detail::at_unit(beta) == LinComb<B>(B()))) throw std::invalid_argument("log*: argument must be 1 on the unit");
    const T j = beta - convolution_unit(h, beta);
    return detail::star_power_series(h, j, beta.trunc(), [](int n) { return Rational(n % 2 == 1 ? 1 : -1, n); });
}

// The closed-form (or structure-specific) antipode as an endomorphism.
template <HopfStructure H>
GradedEndo<BasisOf<H>> antipode_endo(const H& h, int trunc) {
    return GradedEndo<BasisOf<H>>::from_function(trunc, [&h](int n) { return h.basis(n); },
                                                  [&h](const BasisOf<H>& b) { return h.antipode(b); });
}

// S(x) = −Σ S(x₁)x₂ over the terms of Δ(x) with |x₁| < |x|, valid in any
// graded connected bialgebra. Independent of H::antipode.
template <HopfStructure H>
GradedEndo<BasisOf<H>> antipode_by_recursion(const H& h, int trunc) {
    using B = BasisOf<H>;
    GradedEndo<B> s(trunc);
    s.set_image(B(), LinComb<B>(B()));
    for (int n = 1; n <= trunc; ++n)
        for (const B& b : h.basis(n)) {
            LinComb<B> img;
            for (const auto& [lr, c] : h.coproduct(b)) {
                if (static_cast<int>(lr.first.degree()) >= n) continue;
                img.add_scaled(multiply(h, s(lr.first), LinComb<B>(lr.second)), -c);
            }
            s.set_image(b, std::move(img));
        }
    return s;
}

// e = log∗(Id). Idempotent when the product is commutative.
template <HopfStructure H>
GradedEndo<BasisOf<H>> eulerian_idempotent(const H& h, int trunc) {
    if (!H::commutative)
        throw std::invalid_argument(std::string("Eulerian idempotent needs a commutative product; the ") + H::name +
                                    " algebra is not commutative");
    return log_star(h, identity_endo(h, trunc));
}

// D = S∗Y.
template <HopfStructure H>
GradedEndo<BasisOf<H>> dynkin(const H& h, int trunc) {
    return convolve(h, antipode_endo(h, trunc), grading_operator(h, trunc));
}

// Y⁻¹∘D, the Dynkin idempotent.
template <HopfStructure H>
GradedEndo<BasisOf<H>> dynkin_idempotent(const H& h, int trunc) {
    return compose(inverse_grading_operator(h, trunc), dynkin(h, trunc));
}

// Every pair u, v of basis elements with |u| + |v| <= trunc.
template <HopfStructure H, class F>
bool for_all_product_pairs(const H& h, int trunc, bool proper_only, F&& check) {
    using B = BasisOf<H>;
    for (int n = proper_only ? 1 : 0; n <= trunc; ++n)
        for (const B& u : h.basis(n))
            for (int m = proper_only ? 1 : 0; n + m <= trunc; ++m)
                for (const B& v : h.basis(m))
                    if (!check(u, v)) return false;
    return true;
}

// α(𝟙) = 1 and α(uv) = α(u)α(v).
template <HopfStructure H>
bool is_character(const H& h, const GradedSeries<BasisOf<H>>& a) {
    using B = BasisOf<H>;
    if (!a(B()).is_one()) return false;
    return for_all_product_pairs(h, a.trunc(), true, [&](const B& u, const B& v) {
        return pairing(a, h.product(u, v)) == a(u) * a(v);
    });
}

// α(𝟙) = 0 and α(uv) = 0 for u, v of positive degree.
template <HopfStructure H>
bool is_inf_character(const H& h, const GradedSeries<BasisOf<H>>& a) {
    using B = BasisOf<H>;
    if (!a(B()).is_zero()) return false;
    return for_all_product_pairs(h, a.trunc(), true,
                                 [&](const B& u, const B& v) { return pairing(a, h.product(u, v)).is_zero(); });
}

// Γ(α) = Σ α_{k₁}∗⋯∗α_{k_l} / (k₁(k₁+k₂)⋯(k₁+⋯+k_l)), accumulated by total
// degree s: G_s = (1/s) Σ_k G_{s−k}∗α_k.
template <HopfStructure H>
GradedSeries<BasisOf<H>> gamma(const H& h, const GradedSeries<BasisOf<H>>& a) {
    using S = GradedSeries<BasisOf<H>>;
    if (!is_inf_character(h, a)) throw std::invalid_argument("Gamma: argument is not an infinitesimal character");
    const int n = a.trunc();
    std::vector<S> comp(static_cast<std::size_t>(n) + 1, S(n));
    for (int k = 1; k <= n; ++k) comp[static_cast<std::size_t>(k)] = a.homogeneous(k);
    std::vector<S> g(static_cast<std::size_t>(n) + 1, S(n));
    g[0] = S::delta(n);
    S out = g[0];
    for (int s = 1; s <= n; ++s) {
        S acc(n);
        for (int k = 1; k <= s; ++k) acc += convolve(h, g[static_cast<std::size_t>(s - k)], comp[static_cast<std::size_t>(k)]);
        g[static_cast<std::size_t>(s)] = Rational(1, s) * acc;
        out += g[static_cast<std::size_t>(s)];
    }
    return out;
}

}  // namespace lbhopf

#endif
