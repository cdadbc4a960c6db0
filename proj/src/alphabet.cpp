#include "circparikh/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace circparikh {

OrderedAlphabet::OrderedAlphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
    if (symbols_.size() > max_size) throw std::invalid_argument("alphabet has more than 255 symbols");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (s.empty()) throw std::invalid_argument("alphabet symbol must not be empty");
        if (s.find_first_of(" ,[]") != std::string::npos) {
            throw std::invalid_argument("alphabet symbol '" + s + "' contains a reserved character");
        }
        if (std::find(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(i), s) !=
            symbols_.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw std::invalid_argument("duplicate alphabet symbol '" + s + "'");
        }
        if (s.size() != 1) single_character_ = false;
    }
}

OrderedAlphabet OrderedAlphabet::parse(std::string_view list) {
    std::vector<std::string> symbols;
    std::size_t start = 0;
    while (true) {
        auto comma = list.find(',', start);
        auto token = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        symbols.emplace_back(token);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (symbols.size() == 1 && symbols.front().empty()) symbols.clear();
    return OrderedAlphabet(std::move(symbols));
}

std::optional<Letter> OrderedAlphabet::find(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == symbol) return static_cast<Letter>(i);
    }
    return std::nullopt;
}

std::string OrderedAlphabet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out += ',';
        out += symbols_[i];
    }
    return out;
}

Alphabet make_alphabet(std::string_view list) {
    return std::make_shared<const OrderedAlphabet>(OrderedAlphabet::parse(list));
}

Alphabet make_alphabet(std::vector<std::string> symbols) {
    return std::make_shared<const OrderedAlphabet>(std::move(symbols));
}

}  // namespace circparikh
