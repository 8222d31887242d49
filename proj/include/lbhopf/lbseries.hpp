#ifndef LBHOPF_LBSERIES_HPP
#define LBHOPF_LBSERIES_HPP

#include <map>
#include <string>
#include <string_view>

#include "lbhopf/forest.hpp"
#include "lbhopf/grafting.hpp"
#include "lbhopf/hn.hpp"

namespace lbhopf {

// Type 1: pullback character (α ∈ G).
// Type 2: autonomous modified field (β ∈ g, GL-logarithm of α).
// Type 3: time-dependent frozen field (γ ∈ g, α = Q(γ)).
enum class SeriesKind { Type1, Type2, Type3 };

std::string to_string(SeriesKind k);
SeriesKind parse_series_kind(std::string_view text);

class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LBSeries {
public:
    // Throws InvariantError when data is not a character (Type 1) or not an
    // infinitesimal character (Types 2 and 3) up to its truncation.
    LBSeries(SeriesKind kind, ForestSeries data, ColorSet colors = ColorSet());

    SeriesKind kind() const { return kind_; }
    const ForestSeries& data() const { return data_; }
    const ColorSet& colors() const { return colors_; }
    int trunc() const { return data_.trunc(); }
    Rational operator()(const Forest& f) const { return data_(f); }

    friend bool operator==(const LBSeries&, const LBSeries&) = default;

private:
    SeriesKind kind_;
    ForestSeries data_;
    ColorSet colors_;
};

// Operators shared by every conversion at a given color set and truncation,
// built on first use.
struct LBOperators {
    ForestEndo euler;           // Eulerian idempotent of H_N
    ForestEndo dynkin_proj;     // Y⁻¹∘D in the shuffle algebra over OT
    ForestEndo antipode;        // S_N
};
const LBOperators& lb_operators(const ColorSet& colors, int trunc);

// Q in the shuffle algebra over OT, i.e. with concatenation of series as the
// convolution.
ForestSeries q_ot(const ForestSeries& g, const ColorSet& colors = ColorSet());

LBSeries to_type1(const LBSeries& s);
LBSeries to_type2(const LBSeries& s);
LBSeries to_type3(const LBSeries& s);
LBSeries convert(const LBSeries& s, SeriesKind to);

// Solves Y∘γ = B⁺(Q(γ)) degree by degree: γ(B⁺(ω)) = Q(γ)(ω)/(|ω|+1).
LBSeries exact_solution(int trunc);
// γ = o.
LBSeries euler_method_series(int trunc);

// (Q(γ)•Q(γ̃))∘Y⁻¹∘D.
LBSeries compose_type3(const LBSeries& a, const LBSeries& b);
// Q(γ)∘S_N∘Y⁻¹∘D.
LBSeries inverse_type3(const LBSeries& g);
// Q(γ)∘e_N, a Type 2 series.
LBSeries backward_error(const LBSeries& g);

// True when p pairs to zero with every proper shuffle and has no constant
// term, i.e. p is a Lie element of N.
bool is_lie_element(const DPoly& p, const ColorSet& colors = ColorSet());

using SubstitutionMap = std::map<ColorId, DPoly>;

// The D-algebra homomorphism a★ with a★c = a(c):
// a★𝟙 = 𝟙, a★(ωω′) = (a★ω)(a★ω′), a★B⁺_c(ω) = (a★ω)[a(c)].
// Colors missing from the map are sent to themselves. Throws
// std::invalid_argument unless every a(c) is a Lie element.
class Substitution {
public:
    explicit Substitution(SubstitutionMap a, ColorSet colors = ColorSet());

    DPoly operator()(const Forest& f) const;
    DPoly operator()(const DPoly& p) const;
    // Degree-filtered extension to series: terms above trunc are dropped.
    DPoly apply_truncated(const DPoly& p, int trunc) const;

private:
    DPoly image(ColorId c) const;
    SubstitutionMap a_;
    ColorSet colors_;
};

// Ω̃*(α)(ω) = σ(ω) Σ_{ω′∼ω} α(ω′), keyed by the canonical non-planar
// representative of each class up to the truncation.
std::map<Forest, Rational> classical_coefficients(const ForestSeries& a, const ColorSet& colors = ColorSet());

}  // namespace lbhopf

#endif
