#ifndef LBHOPF_WORD_HPP
#define LBHOPF_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbhopf/lincomb.hpp"

namespace lbhopf {

// A finite graded alphabet. Gradings are positive so that only the empty
// word sits in degree 0.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> labels, std::vector<int> grades = {});
    // "a,b,c" or with gradings "a:1,b:2".
    static Alphabet parse_list(std::string_view text);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t id) const { return labels_.at(id); }
    int grade(std::size_t id) const { return grades_.at(id); }
    std::optional<std::size_t> find(std::string_view label) const;
    // True when every label is one character, so words print without separators.
    bool compact() const;

private:
    std::vector<std::string> labels_;
    std::vector<int> grades_;
};

struct Letter {
    std::uint16_t id = 0;
    std::uint16_t grade = 1;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A word over an alphabet. Letters carry their grading so words can be
// graded and compared without the alphabet at hand.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    static Word letter(std::uint16_t id, std::uint16_t grade = 1) { return Word({Letter{id, grade}}); }

    std::size_t degree() const { return degree_; }
    std::size_t length() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    Word slice(std::size_t first, std::size_t last) const;
    Word reversed() const;

    friend Word concat(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
    std::size_t degree_ = 0;
};

// "abc" splits into single-character letters; "x.y.z" splits on dots.
// "1" and "" denote the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string to_string(const Word& w, const Alphabet& alphabet);

// All words of total grading n, in canonical order.
std::vector<Word> enumerate_words(std::size_t n, const Alphabet& alphabet);
BasisFn<Word> word_basis(const Alphabet& alphabet);

std::string format_words(const LinComb<Word>& p, const Alphabet& alphabet);

}  // namespace lbhopf

#endif
