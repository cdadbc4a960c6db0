#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "circparikh/rational.hpp"
#include "circparikh/subwords.hpp"
#include "circparikh/unitriangular.hpp"
#include "circparikh/word.hpp"

namespace circparikh {

/// Conjugacy class [w] of a word, held through its lexicographically least
/// rotation. The class of the empty word is admitted and has size 1.
class CircularWord {
public:
    /// Canonicalizes any representative.
    explicit CircularWord(const Word& representative);

    const Word& canonical() const { return canonical_; }
    /// Primitive root v with canonical == v^k.
    const Word& period() const { return period_; }
    /// |[w]|: number of distinct conjugates (= |period| for non-empty words).
    std::size_t class_size() const { return period_.empty() ? 1 : period_.size(); }
    std::size_t length() const { return canonical_.size(); }
    const Alphabet& alphabet() const { return canonical_.alphabet(); }

    /// Bracketed canonical form, e.g. "[abacbc]".
    std::string to_string() const;

    friend bool operator==(const CircularWord& lhs, const CircularWord& rhs) { return lhs.canonical_ == rhs.canonical_; }
    friend std::strong_ordering operator<=>(const CircularWord& lhs, const CircularWord& rhs) {
        return lhs.canonical_ <=> rhs.canonical_;
    }

private:
    Word canonical_;
    Word period_;
};

/// a_{i+1} ... a_n a_1 ... a_i, with i taken modulo |w|.
Word cyclic_shift(const Word& w, std::size_t i);

/// Start index of a least rotation (Booth's algorithm, linear time).
std::size_t least_rotation(const Word& w);

/// Shortest v with w = v^k; the empty word is its own root.
Word primitive_root(const Word& w);

/// Distinct cyclic shifts in lexicographic order.
std::vector<Word> conjugacy_class(const Word& w);

CircularWord canonicalize(const Word& w);

/// Direct count: sum of |w|_u over the conjugates u of the pattern v.
BigInt direct_count(const CircularWord& cw, const Word& v);

/// Average count: mean of |u|_v over the conjugates u of the text, computed
/// as (1/|w|) sum_i |w_i|_v over all cyclic shifts.
Rational avg_count(const CircularWord& cw, const Word& v);

/// Mean of the linear Parikh matrices over the class; entry (i, j+1) is the
/// average count of the ladder word a_i ... a_j.
UnitriangularMatrix circular_parikh_matrix(const CircularWord& cw);

/// ((1, na, na*nb/2), (0, 1, nb), (0, 0, 1)). Throws on negative counts.
UnitriangularMatrix binary_closed_form(const BigInt& na, const BigInt& nb);

/// Equal circular Parikh matrices. Throws std::invalid_argument on an alphabet mismatch.
bool m_equivalent(const CircularWord& lhs, const CircularWord& rhs);

struct MatrixPair {
    UnitriangularMatrix lhs;
    UnitriangularMatrix rhs;

    bool equal() const { return lhs == rhs; }
};

/// (inverse of the circular matrix of [w], alternate of the circular matrix of [mirror(w)]).
/// Works for any alphabet size; the two agree only up to three letters.
MatrixPair inverse_alternate_pair(const CircularWord& cw);
/// Throws std::invalid_argument for alphabets with more than three letters.
bool circular_inverse_alternate_check(const CircularWord& cw);

/// (matrix of [w^p], p-th power of the matrix of [w]); p >= 1.
MatrixPair power_pair(const CircularWord& cw, unsigned long p);
/// Throws std::invalid_argument for alphabets with more than three letters.
bool circular_power_check(const CircularWord& cw, unsigned long p);

/// |u|_a |v|_b == |v|_a |u|_b. Binary alphabets only.
bool weak_ratio(const Word& u, const Word& v);

/// Sum over orderings sigma of the average counts of a_sigma(1)...a_sigma(s)
/// equals the product of the single-letter average counts.
bool product_identity_check(const CircularWord& cw);

/// One representative per conjugacy class of the s! slender words of length s:
/// the (s-1)! orderings that start with a_1.
std::vector<Word> slender_representatives(const Alphabet& alphabet);

/// Sum of direct counts over slender_representatives equals the product of letter counts.
bool slender_partition_check(const CircularWord& cw);

}  // namespace circparikh
