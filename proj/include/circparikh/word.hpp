#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circparikh/alphabet.hpp"

namespace circparikh {

/// Finite sequence of letters over a shared ordered alphabet. The empty word
/// is allowed. Ordering is lexicographic in alphabet order.
class Word {
public:
    /// Empty word over `alphabet`.
    explicit Word(Alphabet alphabet);
    /// Throws std::invalid_argument if a letter is outside the alphabet.
    Word(Alphabet alphabet, std::vector<Letter> letters);

    /// Reads a word written in the alphabet's text form. Throws
    /// std::invalid_argument naming the first unknown symbol.
    static Word parse(const Alphabet& alphabet, std::string_view text);

    const Alphabet& alphabet() const { return alphabet_; }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    std::size_t count(Letter letter) const;
    /// Letters [pos, pos + len) as a new word.
    Word slice(std::size_t pos, std::size_t len) const;
    Word operator+(const Word& rhs) const;
    Word& operator+=(const Word& rhs);
    Word& push_back(Letter letter);
    Word repeated(std::size_t times) const;

    std::string to_string() const;

    /// Same letters over equal alphabets.
    friend bool operator==(const Word& lhs, const Word& rhs);
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

/// Throws std::invalid_argument unless both words share the same alphabet.
void require_same_alphabet(const Word& lhs, const Word& rhs);

}  // namespace circparikh
