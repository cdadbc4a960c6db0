#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circparikh/rational.hpp"
#include "circparikh/unitriangular.hpp"
#include "circparikh/word.hpp"

namespace circparikh {

/// Per-letter occurrence counts in alphabet order.
struct ParikhVector {
    std::vector<std::size_t> counts;

    std::size_t total() const;
    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

/// |w|_v: number of index tuples i_1 < ... < i_|v| spelling v inside w.
/// Counting the empty word gives 1. Runs in O(|w| |v|) big-integer additions.
BigInt count_subword(const Word& w, const Word& v);

ParikhVector parikh_vector(const Word& w);

/// Linear Parikh matrix: (s+1)x(s+1) with entry (i, j+1) = |w|_{a_i ... a_j}
/// (zero-based letters i <= j).
UnitriangularMatrix parikh_matrix(const Word& w);

/// The ladder word a_first a_{first+1} ... a_last.
Word ladder_word(const Alphabet& alphabet, Letter first, Letter last);

Word mirror(const Word& w);

/// Erases every letter not in `keep`; the result stays over w's alphabet.
/// Throws std::invalid_argument if `keep` names a letter outside the alphabet.
Word project(const Word& w, std::span<const Letter> keep);
/// Same, with the kept letters given as a sub-alphabet of symbols.
Word project(const Word& w, const OrderedAlphabet& keep);

/// Ternary identity |mirror(w)|_abc = |w|_a|w|_b|w|_c - |w|_a|w|_bc - |w|_ab|w|_c + |w|_abc.
/// Throws std::invalid_argument unless the alphabet has exactly three letters.
bool inverse_identity_check(const Word& w);

/// Sum over all orderings of the alphabet of |w|_{a_sigma(1)...a_sigma(s)}
/// equals the product of the letter counts.
bool permutation_identity_check(const Word& w);

/// Every word that uses each alphabet letter exactly once, in lexicographic order.
std::vector<Word> alphabet_permutations(const Alphabet& alphabet);

namespace detail {

/// Adds the strictly upper entries of the Parikh matrix of `letters` (row-major,
/// integer-valued) into `upper`, which must hold s*(s+1)/2 values.
void accumulate_parikh_upper(std::span<const Letter> letters, std::size_t alphabet_size, std::vector<BigInt>& upper);

}  // namespace detail

}  // namespace circparikh
