#include "lbhopf/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lbhopf {

Alphabet::Alphabet(std::vector<std::string> labels, std::vector<int> grades)
    : labels_(std::move(labels)), grades_(std::move(grades)) {
    if (grades_.empty()) grades_.assign(labels_.size(), 1);
    if (grades_.size() != labels_.size()) throw std::invalid_argument("alphabet gradings do not match letters");
    if (labels_.size() > 0xffff) throw std::invalid_argument("alphabet too large");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const std::string& l = labels_[i];
        if (l.empty() || l == "1" || l.find_first_of(" .,:[]") != std::string::npos)
            throw std::invalid_argument("invalid letter '" + l + "'");
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate letter '" + l + "'");
        if (grades_[i] < 1 || grades_[i] > 0xffff) throw std::invalid_argument("letter grading must be positive");
    }
}

Alphabet Alphabet::parse_list(std::string_view text) {
    std::vector<std::string> labels;
    std::vector<int> grades;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        int g = 1;
        if (auto colon = item.find(':'); colon != std::string::npos) {
            try {
                std::size_t used = 0;
                g = std::stoi(item.substr(colon + 1), &used);
                if (used != item.size() - colon - 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("bad letter grading in '" + item + "'");
            }
            item.resize(colon);
        }
        labels.push_back(item);
        grades.push_back(g);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Alphabet(std::move(labels), std::move(grades));
}

std::optional<std::size_t> Alphabet::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool Alphabet::compact() const {
    return std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const Letter& l : letters_) degree_ += l.grade;
}

Word Word::slice(std::size_t first, std::size_t last) const {
    if (first > last || last > letters_.size()) throw std::out_of_range("word slice out of range");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(last)));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word concat(const Word& a, const Word& b) {
    Word w;
    w.letters_.reserve(a.letters_.size() + b.letters_.size());
    w.letters_ = a.letters_;
    w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
    w.degree_ = a.degree_ + b.degree_;
    return w;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    if (text.empty() || text == "1") return Word();
    std::vector<std::string> tokens;
    if (text.find('.') != std::string_view::npos) {
        std::size_t start = 0;
        for (;;) {
            std::size_t dot = text.find('.', start);
            tokens.emplace_back(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
    } else {
        for (char ch : text) tokens.emplace_back(1, ch);
    }
    std::vector<Letter> letters;
    for (const std::string& t : tokens) {
        auto id = alphabet.find(t);
        if (!id) throw std::invalid_argument("unknown letter '" + t + "' in word '" + std::string(text) + "'");
        letters.push_back(Letter{static_cast<std::uint16_t>(*id), static_cast<std::uint16_t>(alphabet.grade(*id))});
    }
    return Word(std::move(letters));
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
    std::string out;
    const bool compact = alphabet.compact();
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i > 0 && !compact) out += '.';
        out += alphabet.label(w.letters()[i].id);
    }
    return out;
}

std::vector<Word> enumerate_words(std::size_t n, const Alphabet& alphabet) {
    std::vector<std::vector<Word>> by_degree(n + 1);
    by_degree[0].push_back(Word());
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t id = 0; id < alphabet.size(); ++id) {
            const auto g = static_cast<std::size_t>(alphabet.grade(id));
            if (g > k) continue;
            const Word a = Word::letter(static_cast<std::uint16_t>(id), static_cast<std::uint16_t>(g));
            for (const Word& rest : by_degree[k - g]) by_degree[k].push_back(concat(a, rest));
        }
    std::sort(by_degree[n].begin(), by_degree[n].end());
    return by_degree[n];
}

BasisFn<Word> word_basis(const Alphabet& alphabet) {
    return [alphabet](int n) { return n < 0 ? std::vector<Word>() : enumerate_words(static_cast<std::size_t>(n), alphabet); };
}

std::string format_words(const LinComb<Word>& p, const Alphabet& alphabet) {
    return format_lincomb(p, [&alphabet](const Word& w) { return to_string(w, alphabet); });
}

}  // namespace lbhopf
