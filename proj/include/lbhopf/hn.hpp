#ifndef LBHOPF_HN_HPP
#define LBHOPF_HN_HPP

#include "lbhopf/forest.hpp"
#include "lbhopf/lincomb.hpp"
#include "lbhopf/wordhopf.hpp"

namespace lbhopf {

// Δ_N(𝟙) = 𝟙⊗𝟙 and, for the last tree τ = B⁺_c(ω₁),
//   Δ_N(ωτ) = ωτ⊗𝟙 + Δ_N(ω) ⊔· (I⊗B⁺_c)Δ_N(ω₁),
// where (a⊗b) ⊔· (c⊗d) = (a⊔c)⊗(bd). Results are memoized process-wide.
TensorComb<Forest> delta_N(const Forest& w);

// S_N(ωτ) = −Σ S_N(x₁)⊔x₂ over Δ_N(ωτ) − ωτ⊗𝟙, memoized.
LinComb<Forest> antipode_N(const Forest& w);

// Shuffle product with Δ_N on planar forests over a color set.
struct HNHopf {
    using basis_type = Forest;
    static constexpr bool commutative = true;
    static constexpr const char* name = "H_N";

    BasisFn<Forest> basis_fn;

    explicit HNHopf(const ColorSet& colors = ColorSet()) : basis_fn(forest_basis(colors)) {}

    LinComb<Forest> product(const Forest& a, const Forest& b) const { return shuffle(a, b); }
    TensorComb<Forest> coproduct(const Forest& w) const { return delta_N(w); }
    LinComb<Forest> antipode(const Forest& w) const { return antipode_N(w); }
    std::vector<Forest> basis(int n) const { return basis_fn(n); }
};

// The shuffle Hopf algebra whose letters are the trees OT.
using ShuffleOT = ShuffleHopf<Forest>;
inline ShuffleOT shuffle_ot(const ColorSet& colors = ColorSet()) { return ShuffleOT{forest_basis(colors)}; }

using ForestSeries = GradedSeries<Forest>;
using ForestEndo = GradedEndo<Forest>;

// (α•β)(ω) = Σ α(ω₍₁₎)β(ω₍₂₎) over Δ_N.
ForestSeries gl_convolve(const ForestSeries& a, const ForestSeries& b, const ColorSet& colors = ColorSet());
ForestSeries exp_gl(const ForestSeries& b, const ColorSet& colors = ColorSet());
ForestSeries log_gl(const ForestSeries& a, const ColorSet& colors = ColorSet());
// Eulerian idempotent of H_N.
ForestEndo euler_N(int trunc, const ColorSet& colors = ColorSet());

}  // namespace lbhopf

#endif
