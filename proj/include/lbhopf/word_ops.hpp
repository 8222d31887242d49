#ifndef LBHOPF_WORD_OPS_HPP
#define LBHOPF_WORD_OPS_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lbhopf/lincomb.hpp"

namespace lbhopf {

// A word over a graded alphabet: letter words, forests (words of trees) and
// Bell words all model this.
template <class W>
concept WordLike = Graded<W> && std::totally_ordered<W> && std::default_initializable<W> &&
    requires(const W& w, std::size_t i) {
        { w.length() } -> std::convertible_to<std::size_t>;
        { w.slice(i, i) } -> std::same_as<W>;
        { w.reversed() } -> std::same_as<W>;
        { concat(w, w) } -> std::same_as<W>;
    };

template <WordLike W>
std::vector<W> letters_of(const W& w) {
    std::vector<W> out;
    out.reserve(w.length());
    for (std::size_t i = 0; i < w.length(); ++i) out.push_back(w.slice(i, i + 1));
    return out;
}

template <WordLike W>
W concat_all(const std::vector<W>& parts) {
    W out;
    for (const W& p : parts) out = concat(out, p);
    return out;
}

// Sum over all interleavings of u and v, counted with multiplicity.
template <WordLike W>
LinComb<W> shuffle(const W& u, const W& v) {
    const std::size_t m = u.length(), n = v.length();
    const std::vector<W> lu = letters_of(u), lv = letters_of(v);
    LinComb<W> out;
    // mask[i] == true: position i takes the next letter of u.
    std::vector<bool> mask(m + n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(m), true);
    std::vector<W> parts(m + n);
    do {
        std::size_t iu = 0, iv = 0;
        for (std::size_t k = 0; k < m + n; ++k) parts[k] = mask[k] ? lu[iu++] : lv[iv++];
        out.add(concat_all(parts), Rational(1));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

template <WordLike W>
LinComb<W> shuffle(const LinComb<W>& p, const LinComb<W>& q) {
    return bilinear_extend(p, q, [](const W& a, const W& b) { return shuffle(a, b); });
}

template <WordLike W>
LinComb<W> concat(const LinComb<W>& p, const LinComb<W>& q) {
    return bilinear_extend(p, q, [](const W& a, const W& b) { return LinComb<W>(concat(a, b)); });
}

// Deconcatenation, including the empty prefix and the empty suffix.
template <WordLike W>
TensorComb<W> deconcat(const W& w) {
    TensorComb<W> out;
    const std::size_t k = w.length();
    for (std::size_t i = 0; i <= k; ++i) out.add({w.slice(0, i), w.slice(i, k)}, Rational(1));
    return out;
}

// Dual of the shuffle product: every split of the letter positions into a
// subword and its complement.
template <WordLike W>
TensorComb<W> deshuffle(const W& w) {
    const std::size_t k = w.length();
    if (k >= 8 * sizeof(unsigned long)) throw std::length_error("word too long to deshuffle");
    const std::vector<W> letters = letters_of(w);
    TensorComb<W> out;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        W left, right;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1UL << i))
                left = concat(left, letters[i]);
            else
                right = concat(right, letters[i]);
        }
        out.add({left, right}, Rational(1));
    }
    return out;
}

// S(a1...ak) = (-1)^k ak...a1, shared by the shuffle and concatenation Hopf algebras.
template <WordLike W>
LinComb<W> antipode_word(const W& w) {
    return LinComb<W>(w.reversed(), Rational(w.length() % 2 == 0 ? 1 : -1));
}

}  // namespace lbhopf

#endif
