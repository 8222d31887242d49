#ifndef LBHOPF_TEST_AXIOMS_HPP
#define LBHOPF_TEST_AXIOMS_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lbhopf/wordhopf.hpp"

namespace testing {

// Direct checks of the Hopf algebra axioms on every basis element (and every
// pair, for compatibility) up to degree n. Only product, coproduct and
// antipode of h are used. Returns a description of the first failure, or "".
template <class H>
std::string hopf_axiom_failure(const H& h, int n) {
    using B = lbhopf::BasisOf<H>;
    using lbhopf::LinComb;
    using lbhopf::Rational;
    using Triple = std::map<std::tuple<B, B, B>, Rational>;

    std::vector<B> all;
    for (int d = 0; d <= n; ++d)
        for (const B& b : h.basis(d)) all.push_back(b);
    const B one{};

    for (const B& x : all) {
        const auto dx = h.coproduct(x);
        const std::string where = " at degree " + std::to_string(x.degree());

        Triple left, right;
        for (const auto& [lr, c] : dx) {
            for (const auto& [ll, c2] : h.coproduct(lr.first))
                left[{ll.first, ll.second, lr.second}] += c * c2;
            for (const auto& [rr, c2] : h.coproduct(lr.second))
                right[{lr.first, rr.first, rr.second}] += c * c2;
        }
        std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(right, [](const auto& kv) { return kv.second.is_zero(); });
        if (left != right) return "coassociativity" + where;

        LinComb<B> eps_left, eps_right;
        for (const auto& [lr, c] : dx) {
            if (lr.first == one) eps_left.add(lr.second, c);
            if (lr.second == one) eps_right.add(lr.first, c);
        }
        if (!(eps_left == LinComb<B>(x)) || !(eps_right == LinComb<B>(x))) return "counit" + where;

        LinComb<B> s_id, id_s;
        for (const auto& [lr, c] : dx) {
            for (const auto& [s, c2] : h.antipode(lr.first))
                for (const auto& [p, c3] : h.product(s, lr.second)) s_id.add(p, c * c2 * c3);
            for (const auto& [s, c2] : h.antipode(lr.second))
                for (const auto& [p, c3] : h.product(lr.first, s)) id_s.add(p, c * c2 * c3);
        }
        const LinComb<B> unit = x == one ? LinComb<B>(one) : LinComb<B>();
        if (!(s_id == unit)) return "S*Id" + where;
        if (!(id_s == unit)) return "Id*S" + where;
    }

    for (const B& x : all)
        for (const B& y : all) {
            if (static_cast<int>(x.degree() + y.degree()) > n) continue;
            lbhopf::TensorComb<B> lhs;
            for (const auto& [p, c] : h.product(x, y))
                for (const auto& [lr, c2] : h.coproduct(p)) lhs.add(lr, c * c2);
            lbhopf::TensorComb<B> rhs;
            for (const auto& [a, ca] : h.coproduct(x))
                for (const auto& [b, cb] : h.coproduct(y))
                    for (const auto& [l, cl] : h.product(a.first, b.first))
                        for (const auto& [r, cr] : h.product(a.second, b.second)) rhs.add({l, r}, ca * cb * cl * cr);
            if (!(lhs == rhs)) return "bialgebra compatibility at degrees " + std::to_string(x.degree()) + "+" +
                                      std::to_string(y.degree());
        }
    return "";
}

}  // namespace testing

#endif
