#include "circparikh/subwords.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace circparikh {

std::size_t ParikhVector::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

BigInt count_subword(const Word& w, const Word& v) {
    require_same_alphabet(w, v);
    const std::size_t m = v.size();
    if (m > w.size()) return 0;
    // dp[j] = occurrences of v[0, j) in the prefix of w read so far.
    std::vector<BigInt> dp(m + 1);
    dp[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter letter = w[i];
        const std::size_t hi = std::min(m, i + 1);
        for (std::size_t j = hi; j >= 1; --j) {
            if (v[j - 1] == letter) dp[j] += dp[j - 1];
        }
    }
    return dp[m];
}

ParikhVector parikh_vector(const Word& w) {
    ParikhVector out{std::vector<std::size_t>(w.alphabet()->size(), 0)};
    for (Letter l : w.letters()) ++out.counts[l];
    return out;
}

namespace detail {

void accumulate_parikh_upper(std::span<const Letter> letters, std::size_t alphabet_size, std::vector<BigInt>& upper) {
    const std::size_t dim = alphabet_size + 1;
    auto offset = [dim](std::size_t row, std::size_t col) { return row * dim - row * (row + 1) / 2 + (col - row - 1); };
    std::vector<BigInt> m(dim * (dim - 1) / 2);
    // Right-multiplying by the elementary matrix of letter k adds column k into column k+1.
    for (Letter k : letters) {
        for (std::size_t i = 0; i <= k; ++i) {
            if (i == k) {
                m[offset(i, k + 1)] += 1;
            } else {
                m[offset(i, k + 1)] += m[offset(i, k)];
            }
        }
    }
    for (std::size_t i = 0; i < m.size(); ++i) upper[i] += m[i];
}

}  // namespace detail

UnitriangularMatrix parikh_matrix(const Word& w) {
    const std::size_t s = w.alphabet()->size();
    std::vector<BigInt> upper(s * (s + 1) / 2);
    detail::accumulate_parikh_upper(w.letters(), s, upper);
    std::vector<Rational> entries(upper.begin(), upper.end());
    return UnitriangularMatrix::from_upper(s + 1, std::move(entries));
}

Word ladder_word(const Alphabet& alphabet, Letter first, Letter last) {
    if (first > last || last >= alphabet->size()) throw std::invalid_argument("invalid ladder bounds");
    std::vector<Letter> letters;
    for (std::size_t l = first; l <= last; ++l) letters.push_back(static_cast<Letter>(l));
    return Word(alphabet, std::move(letters));
}

Word mirror(const Word& w) {
    std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
    return Word(w.alphabet(), std::move(letters));
}

Word project(const Word& w, std::span<const Letter> keep) {
    std::vector<bool> kept(w.alphabet()->size(), false);
    for (Letter l : keep) {
        if (l >= kept.size()) throw std::invalid_argument("projection letter outside alphabet");
        kept[l] = true;
    }
    std::vector<Letter> letters;
    for (Letter l : w.letters()) {
        if (kept[l]) letters.push_back(l);
    }
    return Word(w.alphabet(), std::move(letters));
}

Word project(const Word& w, const OrderedAlphabet& keep) {
    std::vector<Letter> letters;
    for (const auto& symbol : keep.symbols()) {
        auto letter = w.alphabet()->find(symbol);
        if (!letter) {
            throw std::invalid_argument("projection symbol '" + symbol + "' is not in alphabet {" +
                                        w.alphabet()->to_string() + "}");
        }
        letters.push_back(*letter);
    }
    return project(w, letters);
}

bool inverse_identity_check(const Word& w) {
    const auto& alphabet = w.alphabet();
    if (alphabet->size() != 3) throw std::invalid_argument("inverse identity needs a ternary alphabet");
    auto cnt = [&](Letter first, Letter last) { return count_subword(w, ladder_word(alphabet, first, last)); };
    const BigInt a = cnt(0, 0), b = cnt(1, 1), c = cnt(2, 2);
    const BigInt ab = cnt(0, 1), bc = cnt(1, 2), abc = cnt(0, 2);
    const BigInt rhs = a * b * c - a * bc - ab * c + abc;
    return count_subword(mirror(w), ladder_word(alphabet, 0, 2)) == rhs;
}

std::vector<Word> alphabet_permutations(const Alphabet& alphabet) {
    std::vector<Letter> order(alphabet->size());
    std::iota(order.begin(), order.end(), Letter{0});
    std::vector<Word> out;
    do {
        out.emplace_back(alphabet, order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

bool permutation_identity_check(const Word& w) {
    BigInt sum = 0;
    for (const auto& pattern : alphabet_permutations(w.alphabet())) sum += count_subword(w, pattern);
    BigInt product = 1;
    for (auto n : parikh_vector(w).counts) product *= static_cast<unsigned long>(n);
    return sum == product;
}

}  // namespace circparikh
