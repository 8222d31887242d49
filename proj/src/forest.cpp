#include "lbhopf/forest.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "lbhopf/word_ops.hpp"

namespace lbhopf {

namespace {

bool is_label_char(char ch) {
    return ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r' && ch != '[' && ch != ']' && ch != ',';
}

void skip_space(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
}

class Parser {
public:
    Parser(std::string_view text, const ColorSet& colors) : s_(text), colors_(colors) {}

    Forest forest_until_end() {
        std::string code = forest_code();
        skip_space(s_, pos_);
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return Forest::from_code(std::move(code));
    }

private:
    // Reads trees until end of input or a closing bracket.
    std::string forest_code() {
        std::string code;
        for (;;) {
            skip_space(s_, pos_);
            if (pos_ == s_.size() || s_[pos_] == ']') return code;
            code += tree_code();
        }
    }

    std::string tree_code() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && is_label_char(s_[pos_])) ++pos_;
        if (pos_ == start) throw ParseError("expected a color label", pos_);
        std::string_view label = s_.substr(start, pos_ - start);
        auto id = colors_.find(label);
        if (!id) throw ParseError("unknown color label '" + std::string(label) + "'", start);
        std::string code(1, static_cast<char>(*id + 1));
        if (pos_ < s_.size() && s_[pos_] == '[') {
            const std::size_t open = pos_++;
            code += forest_code();
            if (pos_ == s_.size()) throw ParseError("unclosed '['", open);
            ++pos_;
        }
        code += '\0';
        return code;
    }

    std::string_view s_;
    const ColorSet& colors_;
    std::size_t pos_ = 0;
};

void append_tree_text(std::string& out, const std::string& code, std::size_t& pos, const ColorSet& colors) {
    out += colors.label(static_cast<ColorId>(static_cast<unsigned char>(code[pos]) - 1));
    ++pos;
    if (code[pos] != '\0') {
        out += '[';
        bool first = true;
        while (code[pos] != '\0') {
            if (!first) out += ' ';
            append_tree_text(out, code, pos, colors);
            first = false;
        }
        out += ']';
    }
    ++pos;
}

nlohmann::json tree_json(const Tree& t) {
    nlohmann::json children = nlohmann::json::array();
    for (const Tree& c : t.children().trees()) children.push_back(tree_json(c));
    return nlohmann::json::array({static_cast<int>(t.root()), children});
}

Tree tree_from_json(const nlohmann::json& j, const ColorSet& colors) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_array())
        throw std::invalid_argument("tree JSON must be [colorId, [children...]]");
    const long id = j[0].get<long>();
    if (id < 0 || static_cast<std::size_t>(id) >= colors.size())
        throw std::invalid_argument("color id " + std::to_string(id) + " out of range");
    return Tree(static_cast<ColorId>(id), forest_from_json(j[1], colors));
}

Tree canonical_tree(const Tree& t) {
    std::vector<Tree> kids;
    for (const Tree& c : t.children().trees()) kids.push_back(canonical_tree(c));
    std::sort(kids.begin(), kids.end());
    Forest f;
    for (const Tree& k : kids) f = concat(f, k.as_forest());
    return Tree(t.root(), f);
}

// Product of σ over canonical trees times the factorials of the multiplicities.
std::uint64_t sigma_of_canonical(const std::vector<Tree>& trees);

std::uint64_t sigma_tree(const Tree& t) { return sigma_of_canonical(t.children().trees()); }

std::uint64_t sigma_of_canonical(const std::vector<Tree>& trees) {
    std::uint64_t s = 1;
    std::size_t i = 0;
    while (i < trees.size()) {
        std::size_t j = i;
        while (j < trees.size() && trees[j] == trees[i]) ++j;
        const std::uint64_t sub = sigma_tree(trees[i]);
        for (std::size_t m = 1; m <= j - i; ++m) s *= sub * m;
        i = j;
    }
    return s;
}

}  // namespace

ColorSet::ColorSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("color set must not be empty");
    if (labels_.size() > max_colors) throw std::invalid_argument("too many colors");
    std::set<std::string> seen;
    for (const std::string& l : labels_) {
        if (l.empty() || !std::all_of(l.begin(), l.end(), is_label_char))
            throw std::invalid_argument("invalid color label '" + l + "'");
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate color label '" + l + "'");
    }
}

ColorSet ColorSet::parse_list(std::string_view text) {
    std::vector<std::string> labels;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        labels.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ColorSet(std::move(labels));
}

std::optional<ColorId> ColorSet::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<ColorId>(i);
    return std::nullopt;
}

Forest Forest::from_code(std::string code) {
    long depth = 0;
    for (char ch : code) {
        depth += ch == '\0' ? -1 : 1;
        if (depth < 0) throw std::invalid_argument("malformed forest code: unbalanced close");
    }
    if (depth != 0) throw std::invalid_argument("malformed forest code: unbalanced open");
    Forest f;
    f.code_ = std::move(code);
    return f;
}

std::vector<std::size_t> Forest::tree_offsets() const {
    std::vector<std::size_t> offs{0};
    long depth = 0;
    for (std::size_t i = 0; i < code_.size(); ++i) {
        depth += code_[i] == '\0' ? -1 : 1;
        if (depth == 0) offs.push_back(i + 1);
    }
    return offs;
}

std::size_t Forest::length() const { return tree_offsets().size() - 1; }

std::vector<Tree> Forest::trees() const {
    const auto offs = tree_offsets();
    std::vector<Tree> out;
    out.reserve(offs.size() - 1);
    for (std::size_t i = 0; i + 1 < offs.size(); ++i) {
        Tree t;
        t.f_.code_ = code_.substr(offs[i], offs[i + 1] - offs[i]);
        out.push_back(std::move(t));
    }
    return out;
}

Tree Forest::tree(std::size_t i) const {
    const auto offs = tree_offsets();
    if (i + 1 >= offs.size()) throw std::out_of_range("tree index out of range");
    Tree t;
    t.f_.code_ = code_.substr(offs[i], offs[i + 1] - offs[i]);
    return t;
}

Forest Forest::slice(std::size_t first, std::size_t last) const {
    const auto offs = tree_offsets();
    if (first > last || last + 1 > offs.size()) throw std::out_of_range("forest slice out of range");
    Forest f;
    f.code_ = code_.substr(offs[first], offs[last] - offs[first]);
    return f;
}

Forest Forest::reversed() const {
    const auto offs = tree_offsets();
    Forest f;
    for (std::size_t i = offs.size() - 1; i > 0; --i) f.code_ += code_.substr(offs[i - 1], offs[i] - offs[i - 1]);
    return f;
}

Tree::Tree(ColorId root, const Forest& children) {
    if (root >= ColorSet::max_colors) throw std::invalid_argument("color id out of range");
    f_.code_.reserve(children.code().size() + 2);
    f_.code_ += static_cast<char>(root + 1);
    f_.code_ += children.code();
    f_.code_ += '\0';
}

Tree Tree::from_forest(const Forest& f) {
    if (f.length() != 1) throw std::invalid_argument("expected a single tree, got " + std::to_string(f.length()));
    Tree t;
    t.f_ = f;
    return t;
}

Forest Tree::children() const {
    Forest f;
    f.code_ = f_.code_.substr(1, f_.code_.size() - 2);
    return f;
}

Forest parse_forest(std::string_view text, const ColorSet& colors) {
    return Parser(text, colors).forest_until_end();
}

Tree parse_tree(std::string_view text, const ColorSet& colors) {
    Forest f = parse_forest(text, colors);
    if (f.length() != 1) throw ParseError("expected exactly one tree", 0);
    return Tree::from_forest(f);
}

std::string to_string(const Forest& f, const ColorSet& colors) {
    std::string out;
    std::size_t pos = 0;
    const std::string& code = f.code();
    while (pos < code.size()) {
        if (pos != 0) out += ' ';
        append_tree_text(out, code, pos, colors);
    }
    return out;
}

std::string to_string(const Tree& t, const ColorSet& colors) { return to_string(t.as_forest(), colors); }

nlohmann::json to_json(const Forest& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const Tree& t : f.trees()) out.push_back(tree_json(t));
    return out;
}

Forest forest_from_json(const nlohmann::json& j, const ColorSet& colors) {
    if (!j.is_array()) throw std::invalid_argument("forest JSON must be an array of trees");
    Forest f;
    for (const auto& t : j) f = concat(f, tree_from_json(t, colors).as_forest());
    return f;
}

std::vector<Forest> enumerate_forests(std::size_t n, const ColorSet& colors) {
    // forests[k] holds every forest on k nodes; trees are forests[k-1] under B⁺.
    std::vector<std::vector<Forest>> forests(n + 1);
    std::vector<std::vector<Forest>> trees(n + 1);
    forests[0].push_back(Forest());
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t c = 0; c < colors.size(); ++c)
            for (const Forest& kids : forests[k - 1]) trees[k].push_back(Tree(static_cast<ColorId>(c), kids).as_forest());
        for (std::size_t first = 1; first <= k; ++first)
            for (const Forest& t : trees[first])
                for (const Forest& rest : forests[k - first]) forests[k].push_back(concat(t, rest));
        std::sort(forests[k].begin(), forests[k].end());
    }
    return forests[n];
}

std::vector<Tree> enumerate_trees(std::size_t n, const ColorSet& colors) {
    std::vector<Tree> out;
    if (n == 0) return out;
    for (std::size_t c = 0; c < colors.size(); ++c)
        for (const Forest& kids : enumerate_forests(n - 1, colors)) out.emplace_back(static_cast<ColorId>(c), kids);
    std::sort(out.begin(), out.end());
    return out;
}

BasisFn<Forest> forest_basis(const ColorSet& colors) {
    // Each returned function owns its cache; copies share it.
    struct Cache {
        std::mutex mu;
        std::map<int, std::vector<Forest>> by_degree;
    };
    auto cache = std::make_shared<Cache>();
    return [colors, cache](int n) {
        if (n < 0) return std::vector<Forest>();
        std::lock_guard<std::mutex> lock(cache->mu);
        auto it = cache->by_degree.find(n);
        if (it == cache->by_degree.end())
            it = cache->by_degree.emplace(n, enumerate_forests(static_cast<std::size_t>(n), colors)).first;
        return it->second;
    };
}

LinComb<Forest> symmetrize(const Forest& f) {
    LinComb<Forest> out{Forest()};
    for (const Tree& t : f.trees()) {
        LinComb<Forest> branch;
        for (const auto& [kids, c] : symmetrize(t.children())) branch.add(Tree(t.root(), kids).as_forest(), c);
        out = shuffle(out, branch);
    }
    return out;
}

bool equivalent(const Forest& a, const Forest& b) {
    if (a.degree() != b.degree() || a.length() != b.length()) return false;
    return symmetrize(a) == symmetrize(b);
}

Forest canonical_nonplanar(const Forest& f) {
    std::vector<Tree> trees;
    for (const Tree& t : f.trees()) trees.push_back(canonical_tree(t));
    std::sort(trees.begin(), trees.end());
    Forest out;
    for (const Tree& t : trees) out = concat(out, t.as_forest());
    return out;
}

std::uint64_t sigma(const Forest& f) { return sigma_of_canonical(canonical_nonplanar(f).trees()); }

std::string format_forests(const LinComb<Forest>& p, const ColorSet& colors) {
    return format_lincomb(p, [&colors](const Forest& f) { return to_string(f, colors); });
}

}  // namespace lbhopf
