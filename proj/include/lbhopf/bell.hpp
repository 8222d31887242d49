#ifndef LBHOPF_BELL_HPP
#define LBHOPF_BELL_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lbhopf/lincomb.hpp"
#include "lbhopf/wordhopf.hpp"

namespace lbhopf {

// A word d_{j₁}⋯d_{j_k} over the letters d_j, |d_j| = j.
class BellWord {
public:
    BellWord() = default;
    explicit BellWord(std::vector<int> indices);

    std::size_t degree() const { return degree_; }
    std::size_t length() const { return idx_.size(); }
    const std::vector<int>& indices() const { return idx_; }

    BellWord slice(std::size_t first, std::size_t last) const;
    BellWord reversed() const;

    friend BellWord concat(const BellWord& a, const BellWord& b);
    friend bool operator==(const BellWord& a, const BellWord& b) { return a.idx_ == b.idx_; }
    friend std::strong_ordering operator<=>(const BellWord& a, const BellWord& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.idx_ <=> b.idx_;
    }

private:
    std::vector<int> idx_;
    std::size_t degree_ = 0;
};

using BellPoly = LinComb<BellWord>;

// "d1.d2.d1"; "1" is the empty word.
BellWord parse_bell_word(std::string_view text);
std::string to_string(const BellWord& w);
std::string format_bell(const BellPoly& p);
std::string format_bell(const TensorComb<BellWord>& t);

// All words of degree n (compositions of n), optionally of fixed length k.
std::vector<BellWord> bell_words(int n);
std::vector<BellWord> bell_words(int n, int k);

// B_n = (d₁+∂)B_{n−1}, B₀ = 𝟙, with ∂ the derivation d_i ↦ d_{i+1}.
BellPoly bell(int n);
// The length-k part of B_n. Throws std::out_of_range unless 0 ≤ k ≤ n.
BellPoly partial_bell(int n, int k);
// Σ κ(ω) n!/(j₁!⋯j_k!) ω over words of degree n and length k.
BellPoly partial_bell_closed(int n, int k);

// κ(ω) = j₁⋯j_k / (j₁(j₁+j₂)⋯(j₁+⋯+j_k)).
Rational kappa(const BellWord& w);

// Q_{n,k} = Σ κ(ω) ω over words of degree n and length k.
BellPoly q_poly(int n, int k);
// (1/n!) B_{n,k} with d_j ↦ j! d_j.
BellPoly q_poly_rescaled(int n, int k);
BellPoly q_full(int n);

// Δ(d_n) = Σ_k B_{n,k}⊗d_k, extended multiplicatively to words and linearly
// to polynomials.
TensorComb<BellWord> fdb_coproduct(const BellWord& w);
TensorComb<BellWord> fdb_coproduct(const BellPoly& p);

// Q(α) = Σ_ω κ(ω) α_{j₁}∗⋯∗α_{j_k}, where α_j is the degree-j part of α and ∗
// is the convolution of h. Sums over every word of degree ≤ trunc by walking
// prefixes, so each partial convolution product is formed once.
template <HopfStructure H>
GradedSeries<BasisOf<H>> q_operator(const H& h, const GradedSeries<BasisOf<H>>& a) {
    using S = GradedSeries<BasisOf<H>>;
    if (!is_inf_character(h, a)) throw std::invalid_argument("Q: argument is not an infinitesimal character");
    const int n = a.trunc();
    std::vector<S> parts;
    for (int j = 0; j <= n; ++j) parts.push_back(a.homogeneous(j));
    S out = S::delta(n);
    std::vector<int> word;
    // prefix = α_{j₁}∗⋯∗α_{j_i} for the current word.
    auto walk = [&](auto&& self, const S& prefix, int degree) -> void {
        for (int j = 1; degree + j <= n; ++j) {
            word.push_back(j);
            const S next = convolve(h, prefix, parts[static_cast<std::size_t>(j)]);
            out += kappa(BellWord(word)) * next;
            self(self, next, degree + j);
            word.pop_back();
        }
    };
    walk(walk, S::delta(n), 0);
    return out;
}

}  // namespace lbhopf

#endif
