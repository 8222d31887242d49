#ifndef LBHOPF_GRAFTING_HPP
#define LBHOPF_GRAFTING_HPP

#include "lbhopf/forest.hpp"
#include "lbhopf/lincomb.hpp"

namespace lbhopf {

using DPoly = LinComb<Forest>;

// B⁺_c(ω): new root c with branches ω.
Tree b_plus(const Forest& w, ColorId c = 0);
// Root removal. Throws std::invalid_argument unless f is a single tree.
Forest b_minus(const Forest& f);

// Left grafting ω[ω′]. The trees of ω are attached by new edges to nodes of
// ω′ in every possible way; each attached tree becomes the leftmost child of
// its node, and trees attached to the same node keep their order in ω.
// 𝟙[ω′] = ω′ and ω[𝟙] = 0 for ω ≠ 𝟙.
DPoly left_graft(const Forest& w, const Forest& onto);
DPoly left_graft(const DPoly& p, const DPoly& q);

// Grossman–Larson product ω•ω′ = B⁻(ω[B⁺(ω′)]).
DPoly gl_product(const Forest& a, const Forest& b);
DPoly gl_product(const DPoly& p, const DPoly& q);

DPoly concat(const DPoly& p, const DPoly& q);

}  // namespace lbhopf

#endif
