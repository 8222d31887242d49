#include "lbhopf/hn.hpp"

#include <map>
#include <mutex>

#include "lbhopf/grafting.hpp"

namespace lbhopf {

namespace {

template <class V>
class Memo {
public:
    template <class F>
    V get(const Forest& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        // Computed outside the lock: the recursion re-enters the cache.
        V value = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Forest, V> table_;
};

Memo<TensorComb<Forest>>& delta_memo() {
    static Memo<TensorComb<Forest>> memo;
    return memo;
}

Memo<LinComb<Forest>>& antipode_memo() {
    static Memo<LinComb<Forest>> memo;
    return memo;
}

TensorComb<Forest> compute_delta(const Forest& w) {
    TensorComb<Forest> out;
    if (w.empty()) {
        out.add({Forest(), Forest()}, Rational(1));
        return out;
    }
    const std::size_t k = w.length();
    const Forest front = w.slice(0, k - 1);
    const Tree last = w.tree(k - 1);

    out.add({w, Forest()}, Rational(1));
    const TensorComb<Forest> left = delta_N(front);
    const TensorComb<Forest> inner = delta_N(last.children());
    for (const auto& [ab, c1] : left)
        for (const auto& [cd, c2] : inner) {
            const Forest right = concat(ab.second, b_plus(cd.second, last.root()).as_forest());
            for (const auto& [s, c3] : shuffle(ab.first, cd.first)) out.add({s, right}, c1 * c2 * c3);
        }
    return out;
}

LinComb<Forest> compute_antipode(const Forest& w) {
    if (w.empty()) return LinComb<Forest>(Forest());
    LinComb<Forest> out;
    for (const auto& [lr, c] : delta_N(w)) {
        if (lr.first == w && lr.second.empty()) continue;
        for (const auto& [s, cs] : antipode_N(lr.first))
            for (const auto& [p, cp] : shuffle(s, lr.second)) out.add(p, -c * cs * cp);
    }
    return out;
}

}  // namespace

TensorComb<Forest> delta_N(const Forest& w) {
    return delta_memo().get(w, [&w] { return compute_delta(w); });
}

LinComb<Forest> antipode_N(const Forest& w) {
    return antipode_memo().get(w, [&w] { return compute_antipode(w); });
}

ForestSeries gl_convolve(const ForestSeries& a, const ForestSeries& b, const ColorSet& colors) {
    return convolve(HNHopf(colors), a, b);
}

ForestSeries exp_gl(const ForestSeries& b, const ColorSet& colors) { return exp_star(HNHopf(colors), b); }

ForestSeries log_gl(const ForestSeries& a, const ColorSet& colors) { return log_star(HNHopf(colors), a); }

ForestEndo euler_N(int trunc, const ColorSet& colors) { return eulerian_idempotent(HNHopf(colors), trunc); }

}  // namespace lbhopf
