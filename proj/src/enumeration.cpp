#include "circparikh/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace circparikh {

void for_each_word(const Alphabet& alphabet, std::size_t n, const std::function<void(const Word&)>& visit) {
    const auto k = static_cast<Letter>(alphabet->size());
    std::vector<Letter> letters(n, 0);
    while (true) {
        visit(Word(alphabet, letters));
        std::size_t i = n;
        while (i > 0 && letters[i - 1] == k - 1) {
            letters[i - 1] = 0;
            --i;
        }
        if (i == 0) return;
        ++letters[i - 1];
    }
}

std::vector<CircularWord> enumerate_necklaces(const Alphabet& alphabet, std::size_t n) {
    std::vector<CircularWord> out;
    const auto k = static_cast<Letter>(alphabet->size());
    std::vector<Letter> a(n, 0);
    out.emplace_back(Word(alphabet, a));
    if (n == 0) return out;
    while (true) {
        std::size_t i = n;
        while (i > 0 && a[i - 1] == k - 1) --i;
        if (i == 0) break;
        ++a[i - 1];
        // a is now a prenecklace with period i; extend it periodically.
        for (std::size_t j = i; j < n; ++j) a[j] = a[j - i];
        if (n % i == 0) out.emplace_back(Word(alphabet, a));
    }
    return out;
}

BigInt necklace_count(std::size_t alphabet_size, std::size_t n) {
    if (n == 0) return 1;
    auto phi = [](std::size_t m) {
        std::size_t result = m;
        for (std::size_t p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                while (m % p == 0) m /= p;
                result -= result / p;
            }
        }
        if (m > 1) result -= result / m;
        return result;
    };
    BigInt total = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        BigInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), alphabet_size, n / d);
        total += term * static_cast<unsigned long>(phi(d));
    }
    return total / static_cast<unsigned long>(n);
}

std::size_t MEquivClassReport::necklace_count() const {
    std::size_t total = 0;
    for (const auto& [key, members] : classes) total += members.size();
    return total;
}

std::size_t MEquivClassReport::largest_class() const {
    std::size_t best = 0;
    for (const auto& [key, members] : classes) best = std::max(best, members.size());
    return best;
}

std::size_t MEquivClassReport::singleton_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const auto& entry) { return entry.second.size() == 1; }));
}

std::optional<std::string> MEquivClassReport::class_of(const CircularWord& cw) const {
    for (const auto& [key, members] : classes) {
        if (std::binary_search(members.begin(), members.end(), cw)) return key;
    }
    return std::nullopt;
}

MEquivClassReport partition_by_matrix(const Alphabet& alphabet, std::size_t n) {
    MEquivClassReport report{alphabet, n, {}};
    for (auto& cw : enumerate_necklaces(alphabet, n)) {
        report.classes[matrix_key(circular_parikh_matrix(cw))].push_back(std::move(cw));
    }
    return report;
}

Rational minor(const UnitriangularMatrix& matrix, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
    const std::size_t k = rows.size();
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = matrix.at(rows[i], cols[j]);
    }
    Rational det(1L);
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && m[pivot][c].is_zero()) ++pivot;
        if (pivot == k) return Rational{};
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < k; ++r) {
            if (m[r][c].is_zero()) continue;
            const Rational factor = m[r][c] / m[c][c];
            for (std::size_t j = c; j < k; ++j) m[r][j] -= factor * m[c][j];
        }
    }
    return det;
}

namespace {

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
        out.push_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return out;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

MinorSearchResult search_negative_minor(const Alphabet& alphabet, std::size_t max_n) {
    MinorSearchResult result;
    result.max_length = max_n;
    const std::size_t dim = alphabet->size() + 1;
    std::vector<std::vector<std::vector<std::size_t>>> by_size(dim + 1);
    for (std::size_t k = 1; k <= dim; ++k) by_size[k] = subsets(dim, k);

    for (std::size_t n = 0; n <= max_n; ++n) {
        for (const auto& cw : enumerate_necklaces(alphabet, n)) {
            ++result.necklaces_checked;
            const auto matrix = circular_parikh_matrix(cw);
            for (std::size_t k = 1; k <= dim; ++k) {
                for (const auto& rows : by_size[k]) {
                    for (const auto& cols : by_size[k]) {
                        ++result.minors_checked;
                        Rational value = minor(matrix, rows, cols);
                        if (value.sign() < 0) {
                            result.witness = MinorWitness{cw, rows, cols, std::move(value)};
                            return result;
                        }
                    }
                }
            }
        }
    }
    return result;
}

}  // namespace circparikh
