#include "circparikh/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace circparikh {

Word::Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
    for (Letter l : letters_) {
        if (l >= alphabet_->size()) throw std::invalid_argument("letter index " + std::to_string(l) + " outside alphabet");
    }
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
    std::vector<Letter> letters;
    auto lookup = [&](std::string_view token) {
        auto letter = alphabet->find(token);
        if (!letter) {
            throw std::invalid_argument("symbol '" + std::string(token) + "' is not in alphabet {" +
                                        alphabet->to_string() + "}");
        }
        letters.push_back(*letter);
    };
    if (alphabet->single_character()) {
        for (std::size_t i = 0; i < text.size(); ++i) lookup(text.substr(i, 1));
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (text[pos] == ' ') {
                ++pos;
                continue;
            }
            auto end = text.find(' ', pos);
            if (end == std::string_view::npos) end = text.size();
            lookup(text.substr(pos, end - pos));
            pos = end;
        }
    }
    return Word(alphabet, std::move(letters));
}

std::size_t Word::count(Letter letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    if (pos > letters_.size()) throw std::out_of_range("slice start past end of word");
    len = std::min(len, letters_.size() - pos);
    Word out(alphabet_);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return out;
}

Word Word::operator+(const Word& rhs) const {
    Word out = *this;
    out += rhs;
    return out;
}

Word& Word::operator+=(const Word& rhs) {
    require_same_alphabet(*this, rhs);
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

Word& Word::push_back(Letter letter) {
    if (letter >= alphabet_->size()) throw std::invalid_argument("letter outside alphabet");
    letters_.push_back(letter);
    return *this;
}

Word Word::repeated(std::size_t times) const {
    Word out(alphabet_);
    out.letters_.reserve(letters_.size() * times);
    for (std::size_t i = 0; i < times; ++i) out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    return out;
}

std::string Word::to_string() const {
    std::string out;
    const bool compact = alphabet_->single_character();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!compact && i) out += ' ';
        out += alphabet_->symbol(letters_[i]);
    }
    return out;
}

bool operator==(const Word& lhs, const Word& rhs) {
    if (lhs.letters_ != rhs.letters_) return false;
    return lhs.alphabet_ == rhs.alphabet_ || *lhs.alphabet_ == *rhs.alphabet_;
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    return std::lexicographical_compare_three_way(lhs.letters_.begin(), lhs.letters_.end(), rhs.letters_.begin(),
                                                  rhs.letters_.end());
}

void require_same_alphabet(const Word& lhs, const Word& rhs) {
    if (lhs.alphabet() != rhs.alphabet() && !(*lhs.alphabet() == *rhs.alphabet())) {
        throw std::invalid_argument("alphabet mismatch: {" + lhs.alphabet()->to_string() + "} vs {" +
                                    rhs.alphabet()->to_string() + "}");
    }
}

}  // namespace circparikh
