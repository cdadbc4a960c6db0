// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "circparikh/enumeration.hpp"
#include "circparikh/report_io.hpp"
#include "circparikh/rewriting.hpp"
#include "circparikh/suites.hpp"
#include "oracles.hpp"

using namespace circparikh;

namespace {

// Collects mismatches for one criterion; the first few are printed.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        if (notes_.size() < 5) notes_.push_back(what());
        ++failures_;
    }
    void note(std::string text) { info_.push_back(std::move(text)); }
    bool ok() const { return failures_ == 0; }
    std::uint64_t checks() const { return checks_; }
    std::uint64_t failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }
    const std::vector<std::string>& info() const { return info_; }

private:
    std::uint64_t checks_ = 0;
    std::uint64_t failures_ = 0;
    std::vector<std::string> notes_;
    std::vector<std::string> info_;
};

Alphabet ab() { return make_alphabet("a,b"); }
Alphabet abc() { return make_alphabet("a,b,c"); }
Word W(const Alphabet& a, const std::string& s) { return Word::parse(a, s); }
CircularWord C(const Alphabet& a, const std::string& s) { return CircularWord(W(a, s)); }
Rational Q(const char* s) { return Rational::parse(s); }

std::ostream& operator<<(std::ostream& os, const UnitriangularMatrix& m) { return os << matrix_key(m); }

template <typename T>
std::string show(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

UnitriangularMatrix rows(const std::vector<std::vector<const char*>>& text) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : text) {
        r.emplace_back();
        for (const char* x : row) r.back().push_back(Q(x));
    }
    return UnitriangularMatrix::from_rows(r);
}

template <typename A, typename B>
void equal(Tally& t, const std::string& label, const A& got, const B& want) {
    t.expect(got == want, [&] { return label + ": got " + show(got) + ", want " + show(want); });
}

void golden(Tally& t) {
    const auto A = abc();
    equal(t, "|bcbcc|_bc", count_subword(W(A, "bcbcc"), W(A, "bc")), BigInt(5));
    equal(t, "|aabcbc|_abc", count_subword(W(A, "aabcbc"), W(A, "abc")), BigInt(6));
    t.expect(parikh_matrix(W(A, "bacbc")) == rows({{"1", "1", "1", "1"}, {"0", "1", "2", "3"}, {"0", "0", "1", "2"}, {"0", "0", "0", "1"}}),
             [] { return std::string("Psi(bacbc)"); });
    equal(t, "direct |[cabacb]|_abc", direct_count(C(A, "cabacb"), W(A, "abc")), BigInt(4));
    equal(t, "direct |[aaaaaa]|_aa", direct_count(C(A, "aaaaaa"), W(A, "aa")), BigInt(15));
    equal(t, "average |[abcabc]|_ab", avg_count(C(A, "abcabc"), W(A, "ab")), Q("7/3"));
    const auto psi = circular_parikh_matrix(C(A, "cabacb"));
    equal(t, "Psi([cabacb])(1,2)", psi(0, 1), Q("2"));
    equal(t, "Psi([cabacb])(1,3)", psi(0, 2), Q("2"));
    equal(t, "Psi([cabacb])(1,4)", psi(0, 3), Q("4/3"));
    const auto B = ab();
    const auto want = rows({{"1", "2", "2"}, {"0", "1", "2"}, {"0", "0", "1"}});
    equal(t, "Psi([abab])", circular_parikh_matrix(C(B, "abab")), want);
    equal(t, "Psi([bbaa])", circular_parikh_matrix(C(B, "bbaa")), want);
}

void counterexamples(Tally& t) {
    const auto A = abc();
    equal(t, "|[acb]|_ab", avg_count(C(A, "acb"), W(A, "ab")), Q("1/3"));
    equal(t, "|[cab]|_ab", avg_count(C(A, "cab"), W(A, "ab")), Q("2/3"));
    equal(t, "|[abbac]|_abc", avg_count(C(A, "abbac"), W(A, "abc")), Q("2/5"));
    equal(t, "|[baabc]|_abc", avg_count(C(A, "baabc"), W(A, "abc")), Q("1"));

    const auto D = make_alphabet("a,b,c,d");
    const auto w = C(D, "abcd");
    const auto pair = inverse_alternate_pair(w);
    equal(t, "inverse(Psi([abcd]))(1,5)", pair.lhs(0, 4), Q("1/16"));
    equal(t, "alt(Psi([dcba]))(1,5)", pair.rhs(0, 4), Q("0"));
    t.expect(!pair.equal(), [] { return std::string("inverse vs alternate of mirror coincide on [abcd]"); });
    const auto pw = power_pair(w, 2);
    equal(t, "Psi([w^2])(1,5)", pw.lhs(0, 4), Q("2"));
    equal(t, "Psi([w])^2(1,5)", pw.rhs(0, 4), Q("33/16"));
    equal(t, "Psi([w^2]) direct", circular_parikh_matrix(C(D, "abcdabcd"))(0, 4), Q("2"));
    equal(t, "Psi([w])^2 direct", power(circular_parikh_matrix(w), 2)(0, 4), Q("33/16"));

    const auto lhs = C(A, "aaaacbbc");
    const auto rhs = C(A, "aaacbabc");
    t.expect(m_equivalent(lhs, rhs), [] { return std::string("[aaaacbbc] not M-equivalent to [aaacbabc]"); });
    for (const auto& cw : {lhs, rhs}) {
        std::size_t valid = 0;
        for (const auto& app : find_ce1(cw)) valid += app.valid;
        for (const auto& app : find_ce2(cw)) valid += app.valid;
        equal(t, "valid CE1/CE2 applications on " + cw.to_string(), valid, std::size_t{0});
        equal(t, "closure of " + cw.to_string(), rewrite_closure(cw).nodes.size(), std::size_t{1});
    }
}

void binary_closed_form_check(Tally& t) {
    const auto B = ab();
    std::size_t words = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        std::set<std::string> keys;
        for_each_word(B, n, [&](const Word& w) {
            ++words;
            const auto psi = circular_parikh_matrix(CircularWord(w));
            const auto closed = binary_closed_form(BigInt(static_cast<unsigned long>(w.count(0))),
                                                   BigInt(static_cast<unsigned long>(w.count(1))));
            t.expect(psi == closed, [&] { return "closed form differs on [" + w.to_string() + "]"; });
            keys.insert(matrix_key(psi));
        });
        equal(t, "distinct matrices at length " + std::to_string(n), keys.size(), n + 1);

        const auto necklaces = enumerate_necklaces(B, n);
        std::vector<UnitriangularMatrix> mats;
        for (const auto& cw : necklaces) mats.push_back(circular_parikh_matrix(cw));
        for (std::size_t i = 0; i < necklaces.size(); ++i) {
            for (std::size_t j = i + 1; j < necklaces.size(); ++j) {
                const bool same_vector = parikh_vector(necklaces[i].canonical()) == parikh_vector(necklaces[j].canonical());
                t.expect((mats[i] == mats[j]) == same_vector, [&] {
                    return "M-equivalence vs Parikh vector on " + necklaces[i].to_string() + ", " + necklaces[j].to_string();
                });
            }
        }
    }
    equal(t, "binary words enumerated", words, std::size_t{8190});
}

// Side conditions evaluated from letter counts, independently of the rewriting module.
void iff_theorems(Tally& t) {
    const std::string letters = "abc";
    auto cnt = [](const std::string& s, char c) { return static_cast<long>(std::count(s.begin(), s.end(), c)); };
    const auto A = abc();
    std::size_t ce1 = 0, ce2 = 0;
    for (std::size_t total = 0; total <= 5; ++total) {
        for (std::size_t lx = 0; lx <= total; ++lx) {
            oracle::each_string(letters, lx, [&](const std::string& x) {
                oracle::each_string(letters, total - lx, [&](const std::string& y) {
                    ++ce1;
                    const bool cond1 = cnt(y, 'b') * (cnt(x, 'a') - cnt(x, 'c')) == cnt(x, 'b') * (cnt(y, 'a') - cnt(y, 'c'));
                    const auto l1 = C(A, x + "ac" + y + "ca");
                    const auto r1 = C(A, x + "ca" + y + "ac");
                    t.expect(m_equivalent(l1, r1) == cond1, [&] { return "CE1 x=" + x + " y=" + y; });
                    for (char alpha : {'a', 'c'}) {
                        ++ce2;
                        const char bar = alpha == 'a' ? 'c' : 'a';
                        const long lhs = cnt(x, bar) * (static_cast<long>(y.size()) + cnt(y, 'b') + 3);
                        const long rhs = cnt(y, bar) * (static_cast<long>(x.size()) + cnt(x, 'b') + 3);
                        const std::string ab_ = std::string(1, alpha) + "b";
                        const std::string ba_ = std::string("b") + alpha;
                        const auto l2 = C(A, x + ab_ + y + ba_);
                        const auto r2 = C(A, x + ba_ + y + ab_);
                        t.expect(m_equivalent(l2, r2) == (lhs == rhs),
                                 [&] { return std::string("CE2 alpha=") + alpha + " x=" + x + " y=" + y; });
                    }
                });
            });
        }
    }
    equal(t, "CE1 split assignments", ce1, std::size_t{2005});
    equal(t, "CE2 split assignments", ce2, std::size_t{4010});
}

void identity_suites(Tally& t) {
    SuiteLimits limits;
    limits.max_length = 8;
    limits.max_power = 4;
    for (const char* name : {"product-identity", "slender-partition", "average-forms", "inverse-alternate", "power",
                             "linear-rules"}) {
        const auto r = run_suite(name, limits);
        t.note(r.summary());
        t.expect(r.passed() && r.checked > 0, [&] { return r.summary(); });
    }
    SuiteLimits weak;
    weak.max_length = 6;
    const auto r = run_suite("weak-ratio", weak);
    t.note(r.summary());
    t.expect(r.passed() && r.checked > 0, [&] { return r.summary(); });
}

void oracle_equivalence(Tally& t) {
    const auto A = abc();
    const std::string letters = "abc";
    std::vector<std::string> patterns;
    for (std::size_t k = 0; k <= 3; ++k) oracle::each_string(letters, k, [&](const std::string& v) { patterns.push_back(v); });
    for (std::size_t n = 0; n <= 7; ++n) {
        oracle::each_string(letters, n, [&](const std::string& s) {
            const auto w = W(A, s);
            for (const auto& v : patterns) {
                t.expect(count_subword(w, W(A, v)) == oracle::brute_count(s, v), [&] { return "|" + s + "|_" + v; });
            }
            t.expect(circular_parikh_matrix(CircularWord(w)) == oracle::class_sum_matrix(s, letters),
                     [&] { return "class-sum vs shift-sum on [" + s + "]"; });
        });
    }
}

void lyndon_contrast(Tally& t) {
    const auto A = abc();
    const auto u = C(A, "abcabc");
    const auto v = C(A, "abacbc");
    t.expect(circular_parikh_matrix(u) != circular_parikh_matrix(v), [] { return std::string("circular matrices agree"); });
    t.expect(parikh_matrix(u.canonical()) == parikh_matrix(v.canonical()),
             [] { return std::string("linear matrices of least rotations differ"); });
    equal(t, "least rotation of [abcabc]", u.canonical().to_string(), std::string("abcabc"));
    equal(t, "least rotation of [abacbc]", v.canonical().to_string(), std::string("abacbc"));
}

void minor_search(Tally& t) {
    const auto first = search_negative_minor(abc(), 10);
    const auto second = search_negative_minor(abc(), 10);
    const auto report = minor_search_to_json(first);
    t.expect(report == minor_search_to_json(second), [] { return std::string("two runs differ"); });
    equal(t, "necklaces searched", first.necklaces_checked, std::size_t{9504});
    if (first.witness) {
        const auto& w = *first.witness;
        t.note("negative minor " + w.value.to_string() + " on " + w.word.to_string());
    } else {
        t.note("no negative minor among " + std::to_string(first.minors_checked) + " minors of " +
               std::to_string(first.necklaces_checked) + " necklaces");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        void (*run)(Tally&);
    };
    const Criterion criteria[] = {
        {1, "golden examples", golden},
        {2, "counterexample reproduction", counterexamples},
        {3, "binary closed form, |w| <= 12", binary_closed_form_check},
        {4, "CE1/CE2 iff conditions, |x|+|y| <= 5", iff_theorems},
        {5, "identity suites, |w| <= 8", identity_suites},
        {6, "oracle equivalence, ternary |w| <= 7, |v| <= 3", oracle_equivalence},
        {7, "least-rotation contrast", lyndon_contrast},
        {8, "ternary minor search, n <= 10", minor_search},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.expect(false, [&] { return std::string("exception: ") + e.what(); });
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.checks()
                  << " checks, " << t.failures() << " failures, " << ms << " ms)\n";
        for (const auto& line : t.info()) std::cout << "    " << line << '\n';
        for (const auto& line : t.notes()) std::cout << "    mismatch: " << line << '\n';
        std::cout.flush();
        failed += !t.ok();
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (8 - failed) << "/8\n";
    return failed ? 1 : 0;
}
