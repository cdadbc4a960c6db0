#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circparikh/circular.hpp"
#include "circparikh/unitriangular.hpp"

namespace circparikh {

/// Calls `visit` for every word of length n over the alphabet, in lexicographic order.
void for_each_word(const Alphabet& alphabet, std::size_t n, const std::function<void(const Word&)>& visit);

/// One canonical circular word per conjugacy class of words of length n, in
/// lexicographic order (Fredricksen-Kessler-Maiorana generation). n = 0 yields [λ].
std::vector<CircularWord> enumerate_necklaces(const Alphabet& alphabet, std::size_t n);

/// (1/n) sum_{d | n} phi(d) s^(n/d); 1 for n = 0.
BigInt necklace_count(std::size_t alphabet_size, std::size_t n);

/// Necklaces of one length grouped by the key of their circular Parikh matrix.
struct MEquivClassReport {
    Alphabet alphabet;
    std::size_t length = 0;
    /// Matrix key -> members in lexicographic order; keys in std::string order.
    std::map<std::string, std::vector<CircularWord>> classes;

    std::size_t necklace_count() const;
    std::size_t class_count() const { return classes.size(); }
    std::size_t largest_class() const;
    std::size_t singleton_count() const;
    /// Key of the class containing cw, if it is a member.
    std::optional<std::string> class_of(const CircularWord& cw) const;
};

MEquivClassReport partition_by_matrix(const Alphabet& alphabet, std::size_t n);

/// Determinant of the square submatrix picked by `rows` x `cols` (zero-based, equal sizes).
Rational minor(const UnitriangularMatrix& matrix, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols);

struct MinorWitness {
    CircularWord word;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Rational value;
};

struct MinorSearchResult {
    std::size_t max_length = 0;
    std::size_t necklaces_checked = 0;
    std::uint64_t minors_checked = 0;
    std::optional<MinorWitness> witness;
};

/// Scans the circular Parikh matrices of all necklaces of length 0..max_n (in
/// length, then lexicographic order) and every square minor (row subsets, then
/// column subsets, both in lexicographic order by size) for a negative value.
/// Stops at the first one.
MinorSearchResult search_negative_minor(const Alphabet& alphabet, std::size_t max_n);

}  // namespace circparikh
