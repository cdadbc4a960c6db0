#include "circparikh/circular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace circparikh {

namespace {

Word rotate(const Word& w, std::size_t start) {
    std::vector<Letter> letters;
    letters.reserve(w.size());
    auto src = w.letters();
    letters.insert(letters.end(), src.begin() + static_cast<std::ptrdiff_t>(start), src.end());
    letters.insert(letters.end(), src.begin(), src.begin() + static_cast<std::ptrdiff_t>(start));
    return Word(w.alphabet(), std::move(letters));
}

BigInt product_of_counts(const Word& w) {
    BigInt product = 1;
    for (auto n : parikh_vector(w).counts) product *= static_cast<unsigned long>(n);
    return product;
}

void require_at_most_ternary(const CircularWord& cw, const char* what) {
    if (cw.alphabet()->size() > 3) {
        throw std::invalid_argument(std::string(what) + " only holds for alphabets of at most three letters");
    }
}

}  // namespace

CircularWord::CircularWord(const Word& representative)
    : canonical_(rotate(representative, representative.empty() ? 0 : least_rotation(representative))),
      period_(primitive_root(canonical_)) {}

std::string CircularWord::to_string() const { return "[" + canonical_.to_string() + "]"; }

Word cyclic_shift(const Word& w, std::size_t i) {
    if (w.empty()) return w;
    return rotate(w, i % w.size());
}

std::size_t least_rotation(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) return 0;
    auto at = [&](std::size_t i) { return w[i % n]; };
    // Booth: failure function over the doubled word, k tracks the best start.
    std::vector<long> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Letter sj = at(j);
        long i = fail[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
            i = fail[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != at(k)) {
            if (sj < at(k)) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) return w;
    // Longest proper border via the KMP prefix function.
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && w[i] != w[b]) b = border[b - 1];
        if (w[i] == w[b]) ++b;
        border[i] = b;
    }
    const std::size_t p = n - border[n - 1];
    return w.slice(0, n % p == 0 ? p : n);
}

std::vector<Word> conjugacy_class(const Word& w) {
    if (w.empty()) return {w};
    const std::size_t p = primitive_root(w).size();
    std::vector<Word> out;
    out.reserve(p);
    for (std::size_t i = 0; i < p; ++i) out.push_back(rotate(w, i));
    std::sort(out.begin(), out.end());
    return out;
}

CircularWord canonicalize(const Word& w) { return CircularWord(w); }

BigInt direct_count(const CircularWord& cw, const Word& v) {
    require_same_alphabet(cw.canonical(), v);
    BigInt total = 0;
    for (const auto& u : conjugacy_class(v)) total += count_subword(cw.canonical(), u);
    return total;
}

Rational avg_count(const CircularWord& cw, const Word& v) {
    const Word& w = cw.canonical();
    require_same_alphabet(w, v);
    if (w.empty()) return Rational(count_subword(w, v));
    BigInt total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) total += count_subword(rotate(w, i), v);
    return Rational(total, BigInt(static_cast<unsigned long>(w.size())));
}

UnitriangularMatrix circular_parikh_matrix(const CircularWord& cw) {
    const Word& w = cw.canonical();
    const std::size_t s = w.alphabet()->size();
    if (w.empty()) return UnitriangularMatrix(s + 1);
    std::vector<BigInt> sums(s * (s + 1) / 2);
    for (std::size_t i = 0; i < w.size(); ++i) detail::accumulate_parikh_upper(rotate(w, i).letters(), s, sums);
    const BigInt n(static_cast<unsigned long>(w.size()));
    std::vector<Rational> upper;
    upper.reserve(sums.size());
    for (const auto& total : sums) upper.emplace_back(total, n);
    return UnitriangularMatrix::from_upper(s + 1, std::move(upper));
}

UnitriangularMatrix binary_closed_form(const BigInt& na, const BigInt& nb) {
    if (na < 0 || nb < 0) throw std::invalid_argument("letter counts must be non-negative");
    return UnitriangularMatrix::from_upper(3, {Rational(na), Rational(BigInt(na * nb), BigInt(2)), Rational(nb)});
}

bool m_equivalent(const CircularWord& lhs, const CircularWord& rhs) {
    require_same_alphabet(lhs.canonical(), rhs.canonical());
    if (lhs == rhs) return true;
    return circular_parikh_matrix(lhs) == circular_parikh_matrix(rhs);
}

MatrixPair inverse_alternate_pair(const CircularWord& cw) {
    return {inverse(circular_parikh_matrix(cw)), alternate(circular_parikh_matrix(CircularWord(mirror(cw.canonical()))))};
}

bool circular_inverse_alternate_check(const CircularWord& cw) {
    require_at_most_ternary(cw, "inverse-alternate identity");
    return inverse_alternate_pair(cw).equal();
}

MatrixPair power_pair(const CircularWord& cw, unsigned long p) {
    if (p == 0) throw std::invalid_argument("power check needs p >= 1");
    return {circular_parikh_matrix(CircularWord(cw.canonical().repeated(p))), power(circular_parikh_matrix(cw), p)};
}

bool circular_power_check(const CircularWord& cw, unsigned long p) {
    require_at_most_ternary(cw, "power identity");
    return power_pair(cw, p).equal();
}

bool weak_ratio(const Word& u, const Word& v) {
    require_same_alphabet(u, v);
    if (u.alphabet()->size() != 2) throw std::invalid_argument("weak ratio property needs a binary alphabet");
    const BigInt ua(static_cast<unsigned long>(u.count(0))), ub(static_cast<unsigned long>(u.count(1)));
    const BigInt va(static_cast<unsigned long>(v.count(0))), vb(static_cast<unsigned long>(v.count(1)));
    return ua * vb == va * ub;
}

bool product_identity_check(const CircularWord& cw) {
    const auto& alphabet = cw.alphabet();
    Rational sum;
    for (const auto& pattern : alphabet_permutations(alphabet)) sum += avg_count(cw, pattern);
    Rational product(1L);
    for (std::size_t l = 0; l < alphabet->size(); ++l) {
        product *= avg_count(cw, Word(alphabet, {static_cast<Letter>(l)}));
    }
    return sum == product;
}

std::vector<Word> slender_representatives(const Alphabet& alphabet) {
    std::vector<Word> out;
    for (auto& w : alphabet_permutations(alphabet)) {
        if (w[0] == 0) out.push_back(std::move(w));
    }
    return out;
}

bool slender_partition_check(const CircularWord& cw) {
    BigInt sum = 0;
    for (const auto& v : slender_representatives(cw.alphabet())) sum += direct_count(cw, v);
    return sum == product_of_counts(cw.canonical());
}

}  // namespace circparikh
