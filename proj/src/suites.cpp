#include "circparikh/suites.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "circparikh/circular.hpp"
#include "circparikh/enumeration.hpp"
#include "circparikh/rewriting.hpp"
#include "circparikh/subwords.hpp"

namespace circparikh {

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;
constexpr Letter kC = 2;

class Recorder {
public:
    Recorder(SuiteResult& result, std::size_t cap) : result_(result), cap_(cap) {}

    template <typename Witness>
    void check(bool ok, Witness&& witness) {
        ++result_.checked;
        if (ok) return;
        ++result_.failure_count;
        if (result_.failures.size() < cap_) result_.failures.push_back(witness());
    }

private:
    SuiteResult& result_;
    std::size_t cap_;
};

const Alphabet& binary() {
    static const Alphabet alphabet = make_alphabet("a,b");
    return alphabet;
}

const Alphabet& ternary() {
    static const Alphabet alphabet = make_alphabet("a,b,c");
    return alphabet;
}

/// Words of length 0..max over the alphabet.
void for_each_word_upto(const Alphabet& alphabet, std::size_t max, const std::function<void(const Word&)>& visit) {
    for (std::size_t n = 0; n <= max; ++n) for_each_word(alphabet, n, visit);
}

void for_each_necklace_upto(const Alphabet& alphabet, std::size_t max,
                            const std::function<void(const CircularWord&)>& visit) {
    for (std::size_t n = 0; n <= max; ++n) {
        for (const auto& cw : enumerate_necklaces(alphabet, n)) visit(cw);
    }
}

/// Every (x, y) with |x| + |y| <= max_split.
void for_each_split(const Alphabet& alphabet, std::size_t max_split,
                    const std::function<void(const Word&, const Word&)>& visit) {
    for (std::size_t total = 0; total <= max_split; ++total) {
        for (std::size_t xl = 0; xl <= total; ++xl) {
            for_each_word(alphabet, xl, [&](const Word& x) {
                for_each_word(alphabet, total - xl, [&](const Word& y) { visit(x, y); });
            });
        }
    }
}

Word letters(const Alphabet& alphabet, std::initializer_list<Letter> ls) { return Word(alphabet, std::vector<Letter>(ls)); }

void binary_closed_form_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(12);
    for (std::size_t n = 1; n <= max; ++n) {
        for_each_word(binary(), n, [&](const Word& w) {
            const auto pv = parikh_vector(w);
            const auto expected = binary_closed_form(BigInt(static_cast<unsigned long>(pv.counts[0])),
                                                      BigInt(static_cast<unsigned long>(pv.counts[1])));
            rec.check(circular_parikh_matrix(CircularWord(w)) == expected, [&] { return "w=" + w.to_string(); });
        });
    }
}

void distinct_count_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(12);
    for (std::size_t n = 0; n <= max; ++n) {
        const auto report = partition_by_matrix(binary(), n);
        rec.check(report.class_count() == n + 1, [&] {
            return "n=" + std::to_string(n) + " classes=" + std::to_string(report.class_count());
        });
    }
}

void binary_mequiv_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(12);
    for (std::size_t n = 0; n <= max; ++n) {
        const auto necklaces = enumerate_necklaces(binary(), n);
        std::vector<std::string> keys;
        std::vector<ParikhVector> vectors;
        for (const auto& cw : necklaces) {
            keys.push_back(matrix_key(circular_parikh_matrix(cw)));
            vectors.push_back(parikh_vector(cw.canonical()));
        }
        for (std::size_t i = 0; i < necklaces.size(); ++i) {
            for (std::size_t j = i; j < necklaces.size(); ++j) {
                rec.check((keys[i] == keys[j]) == (vectors[i] == vectors[j]),
                          [&] { return necklaces[i].to_string() + " vs " + necklaces[j].to_string(); });
            }
        }
    }
}

void power_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(8);
    const unsigned long max_p = lim.max_power.value_or(4);
    for (const auto& alphabet : {binary(), ternary()}) {
        for_each_necklace_upto(alphabet, max, [&](const CircularWord& cw) {
            for (unsigned long p = 1; p <= max_p; ++p) {
                rec.check(circular_power_check(cw, p),
                          [&] { return cw.to_string() + " p=" + std::to_string(p); });
            }
        });
    }
}

void inverse_alternate_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(8);
    for (const auto& alphabet : {binary(), ternary()}) {
        for_each_necklace_upto(alphabet, max, [&](const CircularWord& cw) {
            rec.check(circular_inverse_alternate_check(cw), [&] { return "circular " + cw.to_string(); });
        });
        for_each_word_upto(alphabet, max, [&](const Word& w) {
            const auto product = parikh_matrix(w) * alternate(parikh_matrix(mirror(w)));
            rec.check(product == UnitriangularMatrix(alphabet->size() + 1), [&] { return "linear " + w.to_string(); });
            if (alphabet->size() == 3) {
                rec.check(inverse_identity_check(w), [&] { return "identity " + w.to_string(); });
            }
        });
    }
}

void product_identity_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(8);
    for (const auto& alphabet : {binary(), ternary()}) {
        for_each_word_upto(alphabet, max, [&](const Word& w) {
            rec.check(permutation_identity_check(w), [&] { return "linear " + w.to_string(); });
        });
        for_each_necklace_upto(alphabet, max, [&](const CircularWord& cw) {
            rec.check(product_identity_check(cw), [&] { return "circular " + cw.to_string(); });
        });
    }
}

void slender_partition_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(8);
    for (const auto& alphabet : {binary(), ternary()}) {
        for_each_necklace_upto(alphabet, max, [&](const CircularWord& cw) {
            rec.check(slender_partition_check(cw), [&] { return cw.to_string(); });
        });
    }
}

void average_forms_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(8);
    for (const auto& alphabet : {binary(), ternary()}) {
        std::vector<Word> patterns;
        for_each_word_upto(alphabet, 3, [&](const Word& v) { patterns.push_back(v); });
        for_each_necklace_upto(alphabet, max, [&](const CircularWord& cw) {
            const auto members = conjugacy_class(cw.canonical());
            for (const auto& v : patterns) {
                BigInt set_sum = 0;
                for (const auto& u : members) set_sum += count_subword(u, v);
                const Rational set_average(set_sum, BigInt(static_cast<unsigned long>(members.size())));
                const Rational shift_average = avg_count(cw, v);
                rec.check(set_average == shift_average, [&] { return cw.to_string() + " v=" + v.to_string(); });
                // Every representative gives the same direct count.
                const BigInt direct = direct_count(cw, v);
                const auto pattern_class = conjugacy_class(v);
                for (const auto& rep : members) {
                    BigInt sum = 0;
                    for (const auto& u : pattern_class) sum += count_subword(rep, u);
                    rec.check(sum == direct, [&] { return "direct " + rep.to_string() + " v=" + v.to_string(); });
                }
            }
        });
    }
}

void weak_ratio_suite(Recorder& rec, const SuiteLimits& lim) {
    const std::size_t max = lim.max_length.value_or(6);
    std::vector<Word> words;
    std::vector<UnitriangularMatrix> matrices;
    for_each_word_upto(binary(), max, [&](const Word& w) {
        words.push_back(w);
        matrices.push_back(circular_parikh_matrix(CircularWord(w)));
    });
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            const bool ratio = weak_ratio(words[i], words[j]);
            const auto concatenated = circular_parikh_matrix(CircularWord(words[i] + words[j]));
            const auto product = matrices[i] * matrices[j];
            rec.check((concatenated == product) == ratio,
                      [&] { return "morphism u=" + words[i].to_string() + " v=" + words[j].to_string(); });
            rec.check((product == matrices[j] * matrices[i]) == ratio,
                      [&] { return "commute u=" + words[i].to_string() + " v=" + words[j].to_string(); });
        }
    }
}

void ce1_iff_suite(Recorder& rec, const SuiteLimits& lim) {
    const auto& abc = ternary();
    for_each_split(abc, lim.max_split.value_or(5), [&](const Word& x, const Word& y) {
        const Word w = x + letters(abc, {kA, kC}) + y + letters(abc, {kC, kA});
        const Word w2 = x + letters(abc, {kC, kA}) + y + letters(abc, {kA, kC});
        const auto [lhs, rhs] = ce1_condition(x, y);
        const bool equivalent = m_equivalent(CircularWord(w), CircularWord(w2));
        rec.check(equivalent == (lhs == rhs), [&] { return "x=" + x.to_string() + " y=" + y.to_string(); });
        bool found = false;
        for (const auto& app : find_ce1(CircularWord(w))) {
            if (app.representative == w && app.x_length == x.size() && app.result == w2) {
                found = app.valid == (lhs == rhs);
            }
        }
        rec.check(found, [&] { return "finder x=" + x.to_string() + " y=" + y.to_string(); });
    });
}

void ce2_iff_suite(Recorder& rec, const SuiteLimits& lim) {
    const auto& abc = ternary();
    for_each_split(abc, lim.max_split.value_or(5), [&](const Word& x, const Word& y) {
        for (Letter alpha : {kA, kC}) {
            const Word w = x + letters(abc, {alpha, kB}) + y + letters(abc, {kB, alpha});
            const Word w2 = x + letters(abc, {kB, alpha}) + y + letters(abc, {alpha, kB});
            const auto [lhs, rhs] = ce2_condition(x, y, alpha);
            const bool equivalent = m_equivalent(CircularWord(w), CircularWord(w2));
            auto witness = [&] {
                return "alpha=" + abc->symbol(alpha) + " x=" + x.to_string() + " y=" + y.to_string();
            };
            rec.check(equivalent == (lhs == rhs), witness);
            bool found = false;
            for (const auto& app : find_ce2(CircularWord(w))) {
                if (app.representative == w && app.x_length == x.size() && app.alpha == alpha && app.result == w2) {
                    found = app.valid == (lhs == rhs);
                }
            }
            rec.check(found, [&] { return "finder " + witness(); });
        }
    });
}

void linear_rules_suite(Recorder& rec, const SuiteLimits& lim) {
    const auto& abc = ternary();
    const std::size_t max = lim.max_length.value_or(8);
    for_each_word_upto(abc, max, [&](const Word& w) {
        const auto psi = parikh_matrix(w);
        for (const auto& out : apply_e1(w)) {
            rec.check(parikh_matrix(out) == psi, [&] { return "E1 " + w.to_string() + " -> " + out.to_string(); });
        }
        for (const auto& out : apply_e2(w)) {
            rec.check(parikh_matrix(out) == psi, [&] { return "E2 " + w.to_string() + " -> " + out.to_string(); });
        }
    });
    // |w|_abc - |w'|_abc = |y|_abar for w = x.(alpha b).y.(b alpha).z, w' = x.(b alpha).y.(alpha b).z.
    const Word abc_word = letters(abc, {kA, kB, kC});
    const std::size_t free_letters = max >= 4 ? max - 4 : 0;
    for_each_split(abc, free_letters, [&](const Word& xy_head, const Word& z) {
        for (std::size_t cut = 0; cut <= xy_head.size(); ++cut) {
            const Word x = xy_head.slice(0, cut);
            const Word y = xy_head.slice(cut, xy_head.size() - cut);
            for (Letter alpha : {kA, kC}) {
                const Letter other = alpha == kA ? kC : kA;
                const Word w = x + letters(abc, {alpha, kB}) + y + letters(abc, {kB, alpha}) + z;
                const Word w2 = x + letters(abc, {kB, alpha}) + y + letters(abc, {alpha, kB}) + z;
                const BigInt delta = count_subword(w, abc_word) - count_subword(w2, abc_word);
                rec.check(delta == static_cast<unsigned long>(y.count(other)),
                          [&] { return "delta " + w.to_string() + " vs " + w2.to_string(); });
            }
        }
    });
}

void swap_lemma_suite(Recorder& rec, const SuiteLimits& lim) {
    const auto& abc = ternary();
    std::vector<Word> slender;
    for_each_word_upto(abc, 2, [&](const Word& u) {
        const auto pv = parikh_vector(u);
        if (std::all_of(pv.counts.begin(), pv.counts.end(), [](std::size_t c) { return c <= 1; })) slender.push_back(u);
    });
    for_each_split(abc, lim.max_split.value_or(5), [&](const Word& x, const Word& y) {
        for (Letter alpha = 0; alpha < 3; ++alpha) {
            for (Letter beta = 0; beta < 3; ++beta) {
                if (alpha == beta) continue;
                const auto [lhs, rhs] = swap_pair(x, y, alpha, beta);
                auto witness = [&, &lhs = lhs, &rhs = rhs] { return lhs.to_string() + " vs " + rhs.to_string(); };
                for (const auto& u : slender) {
                    rec.check(avg_count(lhs, u) == avg_count(rhs, u), [&] { return witness() + " u=" + u.to_string(); });
                }
                if (parikh_vector_sufficiency(x, y, alpha, beta)) {
                    rec.check(m_equivalent(lhs, rhs), [&] { return "parikh-vector " + witness(); });
                }
            }
        }
    });
}

void naive_failures_suite(Recorder& rec, const SuiteLimits&) {
    const auto cases = naive_rule_failure_examples();
    const std::map<std::string, std::pair<Rational, Rational>> expected = {
        {"E1", {Rational(BigInt(1), BigInt(3)), Rational(BigInt(2), BigInt(3))}},
        {"E2", {Rational(BigInt(2), BigInt(5)), Rational(1L)}},
    };
    for (const auto& c : cases) {
        auto witness = [&] {
            return c.rule + ": " + c.before.to_string() + " " + c.before_count.to_string() + " vs " +
                   c.after.to_string() + " " + c.after_count.to_string();
        };
        if (c.rule == "control") {
            rec.check(c.m_equivalent, witness);
            continue;
        }
        const auto& [before, after] = expected.at(c.rule);
        rec.check(c.before_count == before && c.after_count == after && !c.m_equivalent, witness);
    }
}

using SuiteFn = void (*)(Recorder&, const SuiteLimits&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"binary-closed-form", binary_closed_form_suite},
        {"power", power_suite},
        {"inverse-alternate", inverse_alternate_suite},
        {"product-identity", product_identity_suite},
        {"slender-partition", slender_partition_suite},
        {"ce1-iff", ce1_iff_suite},
        {"ce2-iff", ce2_iff_suite},
        {"linear-rules", linear_rules_suite},
        {"naive-failures", naive_failures_suite},
        {"binary-mequiv", binary_mequiv_suite},
        {"distinct-count", distinct_count_suite},
        {"average-forms", average_forms_suite},
        {"weak-ratio", weak_ratio_suite},
        {"swap-lemma", swap_lemma_suite},
    };
    return suites;
}

}  // namespace

std::string SuiteResult::summary() const {
    return std::string(passed() ? "PASS " : "FAIL ") + name + ": " + std::to_string(checked) + " instances, " +
           std::to_string(failure_count) + " failures (" + std::to_string(elapsed.count()) + " ms)";
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(std::string_view name, const SuiteLimits& limits) {
    for (const auto& [suite, fn] : registry()) {
        if (suite != name) continue;
        SuiteResult result;
        result.name = suite;
        Recorder rec(result, limits.failure_cap);
        const auto start = std::chrono::steady_clock::now();
        fn(rec, limits);
        result.elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return result;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace circparikh
