#include "lbhopf/lbseries.hpp"

#include <memory>
#include <mutex>

#include "lbhopf/bell.hpp"

namespace lbhopf {

std::string to_string(SeriesKind k) {
    switch (k) {
    case SeriesKind::Type1: return "type1";
    case SeriesKind::Type2: return "type2";
    case SeriesKind::Type3: return "type3";
    }
    return "?";
}

SeriesKind parse_series_kind(std::string_view text) {
    if (text == "type1" || text == "1") return SeriesKind::Type1;
    if (text == "type2" || text == "2") return SeriesKind::Type2;
    if (text == "type3" || text == "3") return SeriesKind::Type3;
    throw std::invalid_argument("unknown series type '" + std::string(text) + "' (expected type1, type2 or type3)");
}

LBSeries::LBSeries(SeriesKind kind, ForestSeries data, ColorSet colors)
    : kind_(kind), data_(std::move(data)), colors_(std::move(colors)) {
    const ShuffleOT h = shuffle_ot(colors_);
    if (kind_ == SeriesKind::Type1) {
        if (!is_character(h, data_)) throw InvariantError("type1 series must be a character of the shuffle product");
    } else if (!is_inf_character(h, data_)) {
        throw InvariantError(to_string(kind_) + " series must be an infinitesimal character of the shuffle product");
    }
}

const LBOperators& lb_operators(const ColorSet& colors, int trunc) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<std::string>, int>, std::unique_ptr<LBOperators>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{colors.labels(), trunc}];
    if (!slot) {
        const HNHopf hn(colors);
        const ShuffleOT sh = shuffle_ot(colors);
        slot = std::make_unique<LBOperators>(
            LBOperators{eulerian_idempotent(hn, trunc), dynkin_idempotent(sh, trunc), antipode_endo(hn, trunc)});
    }
    return *slot;
}

ForestSeries q_ot(const ForestSeries& g, const ColorSet& colors) { return q_operator(shuffle_ot(colors), g); }

LBSeries to_type1(const LBSeries& s) {
    switch (s.kind()) {
    case SeriesKind::Type1: return s;
    case SeriesKind::Type2: return LBSeries(SeriesKind::Type1, exp_gl(s.data(), s.colors()), s.colors());
    case SeriesKind::Type3: return LBSeries(SeriesKind::Type1, q_ot(s.data(), s.colors()), s.colors());
    }
    throw std::logic_error("bad series kind");
}

LBSeries to_type2(const LBSeries& s) {
    if (s.kind() == SeriesKind::Type2) return s;
    const LBSeries a = to_type1(s);
    return LBSeries(SeriesKind::Type2, compose(a.data(), lb_operators(s.colors(), s.trunc()).euler), s.colors());
}

LBSeries to_type3(const LBSeries& s) {
    if (s.kind() == SeriesKind::Type3) return s;
    const LBSeries a = to_type1(s);
    return LBSeries(SeriesKind::Type3, compose(a.data(), lb_operators(s.colors(), s.trunc()).dynkin_proj), s.colors());
}

LBSeries convert(const LBSeries& s, SeriesKind to) {
    switch (to) {
    case SeriesKind::Type1: return to_type1(s);
    case SeriesKind::Type2: return to_type2(s);
    case SeriesKind::Type3: return to_type3(s);
    }
    throw std::logic_error("bad series kind");
}

LBSeries exact_solution(int trunc) {
    if (trunc < 1) throw std::invalid_argument("exact solution needs truncation order >= 1");
    ForestSeries g(trunc);
    const ShuffleOT h = shuffle_ot();
    for (int n = 1; n <= trunc; ++n) {
        // Degree n of γ reads Q(γ) only in degree n − 1, which involves γ below n.
        const ForestSeries q = q_operator(h, g.truncated(n - 1));
        for (const Tree& t : enumerate_trees(static_cast<std::size_t>(n)))
            g.set(t, q(t.children()) / Rational(n));
    }
    return LBSeries(SeriesKind::Type3, g);
}

LBSeries euler_method_series(int trunc) {
    if (trunc < 1) throw std::invalid_argument("Euler series needs truncation order >= 1");
    ForestSeries g(trunc);
    g.set(Tree::leaf(), Rational(1));
    return LBSeries(SeriesKind::Type3, g);
}

namespace {

void require_type3(const LBSeries& s, const char* op) {
    if (s.kind() != SeriesKind::Type3) throw std::invalid_argument(std::string(op) + " expects a type3 series");
}

}  // namespace

LBSeries compose_type3(const LBSeries& a, const LBSeries& b) {
    require_type3(a, "compose");
    require_type3(b, "compose");
    if (a.trunc() != b.trunc()) throw TruncationError("compose: truncation orders differ");
    if (!(a.colors() == b.colors())) throw std::invalid_argument("compose: color sets differ");
    const ForestSeries prod = gl_convolve(q_ot(a.data(), a.colors()), q_ot(b.data(), b.colors()), a.colors());
    return LBSeries(SeriesKind::Type3, compose(prod, lb_operators(a.colors(), a.trunc()).dynkin_proj), a.colors());
}

LBSeries inverse_type3(const LBSeries& g) {
    require_type3(g, "invert");
    const LBOperators& ops = lb_operators(g.colors(), g.trunc());
    const ForestSeries q = q_ot(g.data(), g.colors());
    return LBSeries(SeriesKind::Type3, compose(compose(q, ops.antipode), ops.dynkin_proj), g.colors());
}

LBSeries backward_error(const LBSeries& g) {
    require_type3(g, "backward-error");
    return LBSeries(SeriesKind::Type2, compose(q_ot(g.data(), g.colors()), lb_operators(g.colors(), g.trunc()).euler),
                    g.colors());
}

bool is_lie_element(const DPoly& p, const ColorSet& colors) {
    if (!p.coeff(Forest()).is_zero()) return false;
    if (p.is_zero()) return true;
    const int n = static_cast<int>(p.max_degree());
    const ForestSeries as_series = ForestSeries::from_lincomb(p, n);
    return is_inf_character(shuffle_ot(colors), as_series);
}

Substitution::Substitution(SubstitutionMap a, ColorSet colors) : a_(std::move(a)), colors_(std::move(colors)) {
    for (const auto& [c, img] : a_) {
        if (c >= colors_.size()) throw std::invalid_argument("substitution names an unknown color id");
        if (!is_lie_element(img, colors_))
            throw std::invalid_argument("substitution image of '" + colors_.label(c) + "' is not a Lie element");
    }
}

DPoly Substitution::image(ColorId c) const {
    auto it = a_.find(c);
    return it == a_.end() ? DPoly(Tree::leaf(c).as_forest()) : it->second;
}

namespace {

DPoly drop_above(const DPoly& p, int trunc) {
    if (trunc < 0) return p;
    DPoly out;
    for (const auto& [f, c] : p)
        if (static_cast<int>(f.degree()) <= trunc) out.add(f, c);
    return out;
}

}  // namespace

DPoly Substitution::operator()(const Forest& f) const { return apply_truncated(DPoly(f), -1); }

DPoly Substitution::operator()(const DPoly& p) const { return apply_truncated(p, -1); }

DPoly Substitution::apply_truncated(const DPoly& p, int trunc) const {
    // A negative trunc means no truncation. Every image has degree at least
    // the degree of its argument, so pruning partial products is exact.
    auto forest_image = [&](auto&& self, const Forest& f) -> DPoly {
        DPoly out{Forest()};
        for (const Tree& t : f.trees()) {
            const DPoly branch = self(self, t.children());
            const DPoly tree_img = drop_above(left_graft(branch, image(t.root())), trunc);
            out = drop_above(concat(out, tree_img), trunc);
        }
        return out;
    };
    DPoly out;
    for (const auto& [f, c] : p) out.add_scaled(forest_image(forest_image, f), c);
    return drop_above(out, trunc);
}

std::map<Forest, Rational> classical_coefficients(const ForestSeries& a, const ColorSet& colors) {
    std::map<Forest, Rational> out;
    for (int n = 0; n <= a.trunc(); ++n)
        for (const Forest& f : enumerate_forests(static_cast<std::size_t>(n), colors)) {
            const Forest key = canonical_nonplanar(f);
            out[key] += a(f);
        }
    for (auto& [key, v] : out) v *= Rational(static_cast<unsigned long>(sigma(key)));
    return out;
}

}  // namespace lbhopf
