#include "lbhopf/grafting.hpp"

#include <stdexcept>
#include <vector>

namespace lbhopf {

Tree b_plus(const Forest& w, ColorId c) { return Tree(c, w); }

Forest b_minus(const Forest& f) { return Tree::from_forest(f).children(); }

DPoly left_graft(const Forest& w, const Forest& onto) {
    if (w.empty()) return DPoly(onto);
    if (onto.empty()) return DPoly();

    const std::vector<Tree> grafted = w.trees();
    const std::string& code = onto.code();
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code[i] != '\0') nodes.push_back(i);

    // choice[i] is the node receiving tree i; iterate over all |ω′|^k maps.
    std::vector<std::size_t> choice(grafted.size(), 0);
    DPoly out;
    for (;;) {
        std::vector<std::string> inserts(nodes.size());
        for (std::size_t i = 0; i < grafted.size(); ++i) inserts[choice[i]] += grafted[i].as_forest().code();
        std::string result;
        result.reserve(code.size() + 2 * w.degree());
        std::size_t node = 0;
        for (std::size_t i = 0; i < code.size(); ++i) {
            result += code[i];
            if (code[i] != '\0') result += inserts[node++];
        }
        out.add(Forest::from_code(std::move(result)), Rational(1));

        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == nodes.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

DPoly left_graft(const DPoly& p, const DPoly& q) {
    return bilinear_extend(p, q, [](const Forest& a, const Forest& b) { return left_graft(a, b); });
}

DPoly gl_product(const Forest& a, const Forest& b) {
    DPoly out;
    for (const auto& [f, c] : left_graft(a, b_plus(b).as_forest())) out.add(b_minus(f), c);
    return out;
}

DPoly gl_product(const DPoly& p, const DPoly& q) {
    return bilinear_extend(p, q, [](const Forest& a, const Forest& b) { return gl_product(a, b); });
}

DPoly concat(const DPoly& p, const DPoly& q) {
    return bilinear_extend(p, q, [](const Forest& a, const Forest& b) { return DPoly(concat(a, b)); });
}

}  // namespace lbhopf
