#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circparikh {

/// Position of a symbol in its ordered alphabet; comparing letters compares
/// symbols in alphabet order.
using Letter = std::uint8_t;

/// Totally ordered, non-empty set of distinct symbols a_1 < a_2 < ... < a_s.
///
/// Symbols are opaque tokens. When every symbol is a single character, words
/// are written by plain concatenation ("bacbc"); otherwise tokens are
/// separated by spaces.
class OrderedAlphabet {
public:
    static constexpr std::size_t max_size = 255;

    /// Throws std::invalid_argument on an empty list, duplicates, empty
    /// tokens or more than max_size symbols.
    explicit OrderedAlphabet(std::vector<std::string> symbols);

    /// Comma-separated list in ascending order, e.g. "a,b,c".
    static OrderedAlphabet parse(std::string_view list);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(Letter letter) const { return symbols_.at(letter); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<Letter> find(std::string_view symbol) const;
    bool single_character() const { return single_character_; }

    std::string to_string() const;

    friend bool operator==(const OrderedAlphabet& lhs, const OrderedAlphabet& rhs) {
        return lhs.symbols_ == rhs.symbols_;
    }

private:
    std::vector<std::string> symbols_;
    bool single_character_ = true;
};

using Alphabet = std::shared_ptr<const OrderedAlphabet>;

Alphabet make_alphabet(std::string_view list);
Alphabet make_alphabet(std::vector<std::string> symbols);

}  // namespace circparikh
