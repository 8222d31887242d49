#include "lbhopf/bell.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lbhopf {

BellWord::BellWord(std::vector<int> indices) : idx_(std::move(indices)) {
    for (int j : idx_) {
        if (j < 1) throw std::invalid_argument("Bell letter index must be positive");
        degree_ += static_cast<std::size_t>(j);
    }
}

BellWord BellWord::slice(std::size_t first, std::size_t last) const {
    if (first > last || last > idx_.size()) throw std::out_of_range("Bell word slice out of range");
    return BellWord(std::vector<int>(idx_.begin() + static_cast<std::ptrdiff_t>(first),
                                     idx_.begin() + static_cast<std::ptrdiff_t>(last)));
}

BellWord BellWord::reversed() const { return BellWord(std::vector<int>(idx_.rbegin(), idx_.rend())); }

BellWord concat(const BellWord& a, const BellWord& b) {
    BellWord w;
    w.idx_ = a.idx_;
    w.idx_.insert(w.idx_.end(), b.idx_.begin(), b.idx_.end());
    w.degree_ = a.degree_ + b.degree_;
    return w;
}

BellWord parse_bell_word(std::string_view text) {
    if (text.empty() || text == "1") return BellWord();
    std::vector<int> idx;
    std::size_t start = 0;
    for (;;) {
        const std::size_t dot = text.find('.', start);
        std::string_view tok = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (tok.size() < 2 || tok[0] != 'd' || tok.find_first_not_of("0123456789", 1) != std::string_view::npos)
            throw std::invalid_argument("bad Bell letter '" + std::string(tok) + "', expected d<j>");
        const int j = std::stoi(std::string(tok.substr(1)));
        if (j < 1) throw std::invalid_argument("Bell letter index must be positive");
        idx.push_back(j);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return BellWord(std::move(idx));
}

std::string to_string(const BellWord& w) {
    if (w.length() == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i > 0) out += '.';
        out += "d" + std::to_string(w.indices()[i]);
    }
    return out;
}

std::string format_bell(const BellPoly& p) {
    return format_lincomb(p, [](const BellWord& w) { return to_string(w); });
}

std::string format_bell(const TensorComb<BellWord>& t) {
    return format_tensor(t, [](const BellWord& w) { return to_string(w); });
}

std::vector<BellWord> bell_words(int n) {
    if (n < 0) return {};
    if (n == 0) return {BellWord()};
    std::vector<BellWord> out;
    for (int j = 1; j <= n; ++j)
        for (const BellWord& rest : bell_words(n - j)) out.push_back(concat(BellWord({j}), rest));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BellWord> bell_words(int n, int k) {
    std::vector<BellWord> out;
    for (const BellWord& w : bell_words(n))
        if (static_cast<int>(w.length()) == k) out.push_back(w);
    return out;
}

namespace {

BellPoly derivation(const BellWord& w) {
    BellPoly out;
    std::vector<int> idx = w.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        ++idx[i];
        out.add(BellWord(idx), Rational(1));
        --idx[i];
    }
    return out;
}

void check_nk(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::out_of_range("need 0 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

}  // namespace

BellPoly bell(int n) {
    if (n < 0) throw std::out_of_range("Bell polynomial index must be non-negative");
    static std::mutex mu;
    static std::vector<BellPoly> table{BellPoly(BellWord())};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        const BellPoly& prev = table.back();
        BellPoly next;
        for (const auto& [w, c] : prev) {
            next.add(concat(BellWord({1}), w), c);
            next.add_scaled(derivation(w), c);
        }
        table.push_back(std::move(next));
    }
    return table[static_cast<std::size_t>(n)];
}

BellPoly partial_bell(int n, int k) {
    check_nk(n, k);
    BellPoly out;
    for (const auto& [w, c] : bell(n))
        if (static_cast<int>(w.length()) == k) out.add(w, c);
    return out;
}

BellPoly partial_bell_closed(int n, int k) {
    check_nk(n, k);
    BellPoly out;
    for (const BellWord& w : bell_words(n, k)) {
        Rational multinomial = Rational::factorial(static_cast<unsigned>(n));
        for (int j : w.indices()) multinomial /= Rational::factorial(static_cast<unsigned>(j));
        out.add(w, kappa(w) * multinomial);
    }
    return out;
}

Rational kappa(const BellWord& w) {
    Rational num(1), den(1);
    long partial = 0;
    for (int j : w.indices()) {
        partial += j;
        num *= Rational(j);
        den *= Rational(partial);
    }
    return num / den;
}

BellPoly q_poly(int n, int k) {
    check_nk(n, k);
    BellPoly out;
    for (const BellWord& w : bell_words(n, k)) out.add(w, kappa(w));
    return out;
}

BellPoly q_poly_rescaled(int n, int k) {
    BellPoly out;
    const Rational inv_nfact = Rational(1) / Rational::factorial(static_cast<unsigned>(n));
    for (const auto& [w, c] : partial_bell(n, k)) {
        Rational scale = inv_nfact;
        for (int j : w.indices()) scale *= Rational::factorial(static_cast<unsigned>(j));
        out.add(w, c * scale);
    }
    return out;
}

BellPoly q_full(int n) {
    BellPoly out;
    for (int k = 0; k <= n; ++k) out += q_poly(n, k);
    return out;
}

TensorComb<BellWord> fdb_coproduct(const BellWord& w) {
    TensorComb<BellWord> out;
    out.add({BellWord(), BellWord()}, Rational(1));
    for (int n : w.indices()) {
        TensorComb<BellWord> letter;
        for (int k = 1; k <= n; ++k)
            for (const auto& [b, c] : partial_bell(n, k)) letter.add({b, BellWord({k})}, c);
        TensorComb<BellWord> next;
        for (const auto& [ab, c1] : out)
            for (const auto& [cd, c2] : letter) next.add({concat(ab.first, cd.first), concat(ab.second, cd.second)}, c1 * c2);
        out = std::move(next);
    }
    return out;
}

TensorComb<BellWord> fdb_coproduct(const BellPoly& p) {
    return linear_extend(p, [](const BellWord& w) { return fdb_coproduct(w); });
}

}  // namespace lbhopf
