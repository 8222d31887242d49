#ifndef LBHOPF_LINCOMB_HPP
#define LBHOPF_LINCOMB_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lbhopf/rational.hpp"

namespace lbhopf {

// Raised when a series or endomorphism is evaluated beyond its truncation
// order, or when two objects with different truncations are combined where
// that is not allowed.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

template <class B>
concept Graded = requires(const B& b) {
    { b.degree() } -> std::convertible_to<std::size_t>;
};

// Finite linear combination of basis elements with exact coefficients.
// Zero coefficients are never stored.
template <class B>
class LinComb {
public:
    using basis_type = B;
    using map_type = std::map<B, Rational>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    explicit LinComb(B b, Rational c = Rational(1)) { add(b, c); }

    void add(const B& b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    // Sum of all coefficients.
    Rational coefficient_sum() const {
        Rational s;
        for (const auto& [b, c] : terms_) s += c;
        return s;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }
    void add_scaled(const LinComb& o, const Rational& s) {
        if (s.is_zero()) return;
        for (const auto& [b, c] : o.terms_) add(b, c * s);
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    std::size_t max_degree() const
        requires Graded<B>
    {
        std::size_t d = 0;
        for (const auto& [b, c] : terms_) d = std::max<std::size_t>(d, b.degree());
        return d;
    }

private:
    map_type terms_;
};

template <class B>
using TensorComb = LinComb<std::pair<B, B>>;

// Σ c_b f(b) where f maps a basis element to a linear combination.
template <class B, class F>
auto linear_extend(const LinComb<B>& p, F&& f) {
    using R = std::invoke_result_t<F&, const B&>;
    R out;
    for (const auto& [b, c] : p) out.add_scaled(f(b), c);
    return out;
}

// Σ c_a c_b f(a, b).
template <class B, class C, class F>
auto bilinear_extend(const LinComb<B>& p, const LinComb<C>& q, F&& f) {
    using R = std::invoke_result_t<F&, const B&, const C&>;
    R out;
    for (const auto& [a, ca] : p)
        for (const auto& [b, cb] : q) out.add_scaled(f(a, b), ca * cb);
    return out;
}

template <class B>
TensorComb<B> tensor(const LinComb<B>& p, const LinComb<B>& q) {
    TensorComb<B> out;
    for (const auto& [a, ca] : p)
        for (const auto& [b, cb] : q) out.add({a, b}, ca * cb);
    return out;
}

// Truncated series: a functional on the basis, known for all basis elements
// of degree <= trunc. Evaluating above the truncation is an error.
template <Graded B>
class GradedSeries {
public:
    using map_type = std::map<B, Rational>;

    explicit GradedSeries(int trunc = 0) : trunc_(trunc) {
        if (trunc < 0) throw std::invalid_argument("negative truncation order");
    }

    // The convolution unit: 1 on the empty element, 0 elsewhere.
    static GradedSeries delta(int trunc) {
        GradedSeries s(trunc);
        s.set(B(), Rational(1));
        return s;
    }

    static GradedSeries from_lincomb(const LinComb<B>& p, int trunc) {
        GradedSeries s(trunc);
        for (const auto& [b, c] : p) s.set(b, c);
        return s;
    }

    int trunc() const { return trunc_; }

    Rational operator()(const B& b) const {
        check(b);
        auto it = coeffs_.find(b);
        return it == coeffs_.end() ? Rational() : it->second;
    }

    void set(const B& b, const Rational& c) {
        check(b);
        if (c.is_zero())
            coeffs_.erase(b);
        else
            coeffs_[b] = c;
    }
    void add(const B& b, const Rational& c) { set(b, (*this)(b) + c); }

    const map_type& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Same coefficients, lower truncation order.
    GradedSeries truncated(int n) const {
        GradedSeries s(std::min(n, trunc_));
        for (const auto& [b, c] : coeffs_)
            if (static_cast<int>(b.degree()) <= s.trunc_) s.coeffs_.emplace(b, c);
        return s;
    }

    // Restriction to the homogeneous component of degree k (same truncation).
    GradedSeries homogeneous(int k) const {
        GradedSeries s(trunc_);
        for (const auto& [b, c] : coeffs_)
            if (static_cast<int>(b.degree()) == k) s.coeffs_.emplace(b, c);
        return s;
    }

    LinComb<B> to_lincomb() const {
        LinComb<B> p;
        for (const auto& [b, c] : coeffs_) p.add(b, c);
        return p;
    }

    // Mixed truncations combine to the smaller order.
    GradedSeries& operator+=(const GradedSeries& o) { return combine(o, Rational(1)); }
    GradedSeries& operator-=(const GradedSeries& o) { return combine(o, Rational(-1)); }
    GradedSeries& operator*=(const Rational& s) {
        if (s.is_zero()) coeffs_.clear();
        for (auto& [b, c] : coeffs_) c *= s;
        return *this;
    }
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator-(GradedSeries a) { return a *= Rational(-1); }
    friend GradedSeries operator*(const Rational& s, GradedSeries a) { return a *= s; }
    friend GradedSeries operator*(GradedSeries a, const Rational& s) { return a *= s; }
    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check(const B& b) const {
        if (static_cast<int>(b.degree()) > trunc_)
            throw TruncationError("basis element of degree " + std::to_string(b.degree()) +
                                  " beyond truncation order " + std::to_string(trunc_));
    }
    GradedSeries& combine(const GradedSeries& o, const Rational& s) {
        if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
        for (const auto& [b, c] : o.coeffs_)
            if (static_cast<int>(b.degree()) <= trunc_) add(b, s * c);
        return *this;
    }

    int trunc_;
    map_type coeffs_;
};

// Dual pairing <α, P> = Σ c_b α(b).
template <Graded B>
Rational pairing(const GradedSeries<B>& alpha, const LinComb<B>& p) {
    Rational s;
    for (const auto& [b, c] : p) s += c * alpha(b);
    return s;
}

// Enumerates the basis elements of a fixed degree.
template <class B>
using BasisFn = std::function<std::vector<B>(int)>;

// Linear endomorphism stored by its images on every basis element up to the
// truncation order. Basis elements without a stored image map to zero.
template <Graded B>
class GradedEndo {
public:
    using image_map = std::map<B, LinComb<B>>;

    explicit GradedEndo(int trunc = 0) : trunc_(trunc) {
        if (trunc < 0) throw std::invalid_argument("negative truncation order");
    }

    template <class F>
    static GradedEndo from_function(int trunc, const BasisFn<B>& basis, F&& f) {
        GradedEndo e(trunc);
        for (int n = 0; n <= trunc; ++n)
            for (const B& b : basis(n)) e.set_image(b, f(b));
        return e;
    }

    int trunc() const { return trunc_; }

    void set_image(const B& b, LinComb<B> image) {
        check(b);
        if (image.is_zero())
            images_.erase(b);
        else
            images_[b] = std::move(image);
    }

    LinComb<B> operator()(const B& b) const {
        check(b);
        auto it = images_.find(b);
        return it == images_.end() ? LinComb<B>() : it->second;
    }
    LinComb<B> operator()(const LinComb<B>& p) const {
        return linear_extend(p, [this](const B& b) { return (*this)(b); });
    }

    const image_map& images() const { return images_; }

    GradedEndo& operator+=(const GradedEndo& o) { return combine(o, Rational(1)); }
    GradedEndo& operator-=(const GradedEndo& o) { return combine(o, Rational(-1)); }
    GradedEndo& operator*=(const Rational& s) {
        if (s.is_zero()) images_.clear();
        for (auto& [b, img] : images_) img *= s;
        return *this;
    }
    friend GradedEndo operator+(GradedEndo a, const GradedEndo& b) { return a += b; }
    friend GradedEndo operator-(GradedEndo a, const GradedEndo& b) { return a -= b; }
    friend GradedEndo operator*(const Rational& s, GradedEndo a) { return a *= s; }
    friend bool operator==(const GradedEndo& a, const GradedEndo& b) {
        return a.trunc_ == b.trunc_ && a.images_ == b.images_;
    }

private:
    void check(const B& b) const {
        if (static_cast<int>(b.degree()) > trunc_)
            throw TruncationError("endomorphism evaluated at degree " + std::to_string(b.degree()) +
                                  " beyond truncation order " + std::to_string(trunc_));
    }
    GradedEndo& combine(const GradedEndo& o, const Rational& s) {
        if (o.trunc_ != trunc_) throw TruncationError("endomorphism truncation mismatch");
        for (const auto& [b, img] : o.images_) {
            LinComb<B> sum = (*this)(b);
            sum.add_scaled(img, s);
            set_image(b, std::move(sum));
        }
        return *this;
    }

    int trunc_;
    image_map images_;
};

// f∘g.
template <Graded B>
GradedEndo<B> compose(const GradedEndo<B>& f, const GradedEndo<B>& g) {
    if (f.trunc() != g.trunc()) throw TruncationError("endomorphism truncation mismatch");
    GradedEndo<B> out(f.trunc());
    for (const auto& [b, img] : g.images()) out.set_image(b, f(img));
    return out;
}

// Right composition of a series with an endomorphism: (α∘E)(b) = <α, E(b)>.
template <Graded B>
GradedSeries<B> compose(const GradedSeries<B>& alpha, const GradedEndo<B>& e) {
    GradedSeries<B> out(std::min(alpha.trunc(), e.trunc()));
    for (const auto& [b, img] : e.images())
        if (static_cast<int>(b.degree()) <= out.trunc()) out.set(b, pairing(alpha, img));
    return out;
}

template <Graded B>
GradedEndo<B> identity_endo(int trunc, const BasisFn<B>& basis) {
    return GradedEndo<B>::from_function(trunc, basis, [](const B& b) { return LinComb<B>(b); });
}

// Y: b ↦ |b| b.
template <Graded B>
GradedEndo<B> grading_operator(int trunc, const BasisFn<B>& basis) {
    return GradedEndo<B>::from_function(trunc, basis, [](const B& b) {
        return LinComb<B>(b, Rational(static_cast<long>(b.degree())));
    });
}

// Y⁻¹ on positive degrees, zero on degree 0.
template <Graded B>
GradedEndo<B> inverse_grading_operator(int trunc, const BasisFn<B>& basis) {
    return GradedEndo<B>::from_function(trunc, basis, [](const B& b) {
        if (b.degree() == 0) return LinComb<B>();
        return LinComb<B>(b, Rational(1, static_cast<long>(b.degree())));
    });
}

namespace detail {

template <class B, class Printer>
std::string format_terms(const LinComb<B>& p, Printer&& print) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : p) {
        const std::string text = print(b);
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        if (!mag.is_one()) out += mag.str() + " ";
        out += text;
        first = false;
    }
    return out;
}

// Parenthesizes text with a space outside brackets, e.g. a forest of
// several trees; "o[o o]" stays bare.
inline std::string basis_text(std::string text) {
    if (text.empty()) return "1";
    int depth = 0;
    for (char ch : text) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ' ' && depth == 0) return "(" + text + ")";
    }
    return text;
}

}  // namespace detail

// Human readable rendering: "2 x - 1/2 (y z) + w". Basis texts containing a
// space are parenthesized; the empty element renders as "1".
template <class B, class Printer>
std::string format_lincomb(const LinComb<B>& p, Printer&& print) {
    return detail::format_terms(p, [&print](const B& b) { return detail::basis_text(print(b)); });
}

// "2 (o o) ⊗ o + o ⊗ 1".
template <class B, class Printer>
std::string format_tensor(const TensorComb<B>& t, Printer&& print) {
    return detail::format_terms(t, [&print](const std::pair<B, B>& lr) {
        return detail::basis_text(print(lr.first)) + " ⊗ " + detail::basis_text(print(lr.second));
    });
}

}  // namespace lbhopf

#endif
