#include <set>

#include "circparikh/circular.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace testing;

namespace {

std::vector<std::string> to_strings(const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(w.to_string());
    return out;
}

}  // namespace

TEST_SUITE("conjugacy") {
    TEST_CASE("cyclic_shift") {
        CHECK(cyclic_shift(W(abc(), "cabacb"), 1) == W(abc(), "abacbc"));
        CHECK(cyclic_shift(W(abc(), "cabacb"), 0) == W(abc(), "cabacb"));
        CHECK(cyclic_shift(W(abc(), "abab"), 2) == W(abc(), "abab"));
        CHECK(cyclic_shift(W(abc(), "cabacb"), 7) == W(abc(), "abacbc"));
        CHECK(cyclic_shift(W(abc(), ""), 3) == W(abc(), ""));
    }

    TEST_CASE("conjugacy_class") {
        auto members = to_strings(conjugacy_class(W(abc(), "cabacb")));
        CHECK(std::set<std::string>(members.begin(), members.end()) ==
              std::set<std::string>{"cabacb", "abacbc", "bacbca", "acbcab", "cbcaba", "bcabac"});
        CHECK(to_strings(conjugacy_class(W(abc(), "aaaaaa"))) == std::vector<std::string>{"aaaaaa"});
        CHECK(to_strings(conjugacy_class(W(abc(), "abab"))) == std::vector<std::string>{"abab", "baba"});
    }

    TEST_CASE("canonicalize") {
        auto cw = canonicalize(W(abc(), "cabacb"));
        CHECK(cw.canonical() == W(abc(), "abacbc"));
        CHECK(cw.class_size() == 6);
        CHECK(canonicalize(W(ab(), "bbaa")).canonical() == W(ab(), "aabb"));
        auto aaaaaa = canonicalize(W(abc(), "aaaaaa"));
        CHECK(aaaaaa.canonical() == W(abc(), "aaaaaa"));
        CHECK(aaaaaa.period() == W(abc(), "a"));
        CHECK(aaaaaa.class_size() == 1);
        auto empty = canonicalize(W(abc(), ""));
        CHECK(empty.class_size() == 1);
        CHECK(empty.to_string() == "[]");
        CHECK(canonicalize(W(abc(), "cabacb")).to_string() == "[abacbc]");
    }

    TEST_CASE("least rotation, period and class size agree with brute force") {
        for (std::size_t n = 1; n <= 8; ++n) {
            oracle::each_string("abc", n, [&](const std::string& s) {
                const auto w = W(abc(), s.c_str());
                const auto cw = canonicalize(w);
                REQUIRE(cw.canonical().to_string() == oracle::least_rotation(s));
                REQUIRE(cw.class_size() == oracle::class_of(s).size());
                REQUIRE(cw.canonical() == cw.period().repeated(n / cw.period().size()));
                REQUIRE(primitive_root(cw.period()) == cw.period());
            });
        }
    }

    TEST_CASE("canonicalize identifies exactly the conjugates") {
        std::vector<std::string> words;
        oracle::each_string("ab", 6, [&](const std::string& s) { words.push_back(s); });
        for (const auto& u : words) {
            const auto cu = canonicalize(W(ab(), u.c_str()));
            const auto cls = oracle::class_of(u);
            for (const auto& v : words) {
                REQUIRE((cu == canonicalize(W(ab(), v.c_str()))) == (cls.count(v) == 1));
            }
        }
    }
}

TEST_SUITE("counting") {
    TEST_CASE("direct_count") {
        CHECK(direct_count(C(abc(), "cabacb"), W(abc(), "abc")) == 4);
        CHECK(direct_count(C(abc(), "aaaaaa"), W(abc(), "aa")) == 15);
        CHECK(direct_count(C(abc(), "aab"), W(abc(), "aa")) == 1);
        CHECK(direct_count(C(abc(), "ab"), W(abc(), "abc")) == 0);
        CHECK(direct_count(C(abc(), "cabacb"), W(abc(), "acb")) == oracle::brute_direct("cabacb", "acb"));
        CHECK(direct_count(C(abc(), "cabacb"), W(abc(), "acb")) == 4);
    }

    TEST_CASE("direct count of a^k is a binomial") {
        oracle::each_string("abc", 7, [&](const std::string& s) {
            const auto cw = C(abc(), s.c_str());
            const long na = static_cast<long>(cw.canonical().count(0));
            for (long k = 1; k <= na; ++k) {
                REQUIRE(Rational(direct_count(cw, W(abc(), std::string(static_cast<std::size_t>(k), 'a').c_str()))) ==
                        oracle::choose(na, k));
            }
        });
    }

    TEST_CASE("avg_count") {
        CHECK(avg_count(C(abc(), "abcabc"), W(abc(), "ab")) == R("7/3"));
        CHECK(avg_count(C(abc(), "acb"), W(abc(), "ab")) == R("1/3"));
        CHECK(avg_count(C(abc(), "cab"), W(abc(), "ab")) == R("2/3"));
        CHECK(avg_count(C(abc(), "abc"), W(abc(), "ab")) == R("2/3"));
        // [ab] = {ab, ba}: the average is 1/2; the value 1 is the direct count.
        CHECK(avg_count(C(abc(), "ab"), W(abc(), "ab")) == R("1/2"));
        CHECK(direct_count(C(abc(), "ab"), W(abc(), "ab")) == 1);
        CHECK(avg_count(C(abc(), "cabacb"), W(abc(), "a")) == R("2"));
        CHECK(avg_count(C(abc(), ""), W(abc(), "")) == R("1"));
        CHECK(avg_count(C(abc(), ""), W(abc(), "a")) == R("0"));
    }

    TEST_CASE("shift average equals class average and is representative independent") {
        for (std::size_t n = 0; n <= 6; ++n) {
            oracle::each_string("abc", n, [&](const std::string& s) {
                for (const char* v : {"a", "ab", "ba", "abc", "cab", "aa", "bcb"}) {
                    const auto expected = oracle::class_average(s, v);
                    REQUIRE(avg_count(C(abc(), s.c_str()), W(abc(), v)) == expected);
                    REQUIRE(Rational(direct_count(C(abc(), s.c_str()), W(abc(), v))) == Rational(oracle::brute_direct(s, v)));
                }
            });
        }
    }
}

TEST_SUITE("circular parikh matrix") {
    TEST_CASE("examples") {
        CHECK(circular_parikh_matrix(C(abc(), "cabacb")) ==
              M({{"1", "2", "2", "4/3"}, {"0", "1", "2", "2"}, {"0", "0", "1", "2"}, {"0", "0", "0", "1"}}));
        const auto abab = M({{"1", "2", "2"}, {"0", "1", "2"}, {"0", "0", "1"}});
        CHECK(circular_parikh_matrix(C(ab(), "abab")) == abab);
        CHECK(circular_parikh_matrix(C(ab(), "bbaa")) == abab);
        CHECK(circular_parikh_matrix(C(abc(), "")) == UnitriangularMatrix(4));
        CHECK(circular_parikh_matrix(C(abc(), "abc")) ==
              M({{"1", "1", "2/3", "1/3"}, {"0", "1", "1", "2/3"}, {"0", "0", "1", "1"}, {"0", "0", "0", "1"}}));
        CHECK(circular_parikh_matrix(C(abc(), "cba")) ==
              M({{"1", "1", "1/3", "0"}, {"0", "1", "1", "1/3"}, {"0", "0", "1", "1"}, {"0", "0", "0", "1"}}));
    }

    TEST_CASE("shift-sum matches the class-sum oracle") {
        for (std::size_t n = 0; n <= 6; ++n) {
            oracle::each_string("abc", n, [&](const std::string& s) {
                REQUIRE(circular_parikh_matrix(C(abc(), s.c_str())) == oracle::class_sum_matrix(s, "abc"));
            });
        }
    }

    TEST_CASE("four-letter alphabets are supported") {
        CHECK(circular_parikh_matrix(C(abcd(), "abcd")) == oracle::class_sum_matrix("abcd", "abcd"));
    }

    TEST_CASE("binary closed form") {
        CHECK(binary_closed_form(2, 2) == circular_parikh_matrix(C(ab(), "abab")));
        CHECK(binary_closed_form(0, 5)(0, 2) == R("0"));
        CHECK(binary_closed_form(1, 1) == M({{"1", "1", "1/2"}, {"0", "1", "1"}, {"0", "0", "1"}}));
        CHECK(binary_closed_form(1, 1) == circular_parikh_matrix(C(ab(), "ab")));
        CHECK_THROWS_AS(binary_closed_form(-1, 2), std::invalid_argument);
    }

    TEST_CASE("Lyndon conjugates do not determine the circular matrix") {
        const auto u = C(abc(), "abcabc"), v = C(abc(), "abacbc");
        CHECK(circular_parikh_matrix(u) != circular_parikh_matrix(v));
        CHECK(parikh_matrix(u.canonical()) == parikh_matrix(v.canonical()));
    }
}

TEST_SUITE("m-equivalence and checks") {
    TEST_CASE("m_equivalent") {
        CHECK(m_equivalent(C(ab(), "abab"), C(ab(), "bbaa")));
        CHECK_FALSE(m_equivalent(C(abc(), "acb"), C(abc(), "cab")));
        CHECK(m_equivalent(C(abc(), "cabacb"), C(abc(), "cabacb")));
        CHECK(m_equivalent(C(abc(), "aaaacbbc"), C(abc(), "aaacbabc")));
        CHECK_THROWS_AS(m_equivalent(C(ab(), "ab"), C(abc(), "ab")), std::invalid_argument);
    }

    TEST_CASE("inverse-alternate") {
        CHECK(circular_inverse_alternate_check(C(abc(), "")));
        CHECK(circular_inverse_alternate_check(C(abc(), "cabacb")));
        const auto pair = inverse_alternate_pair(C(abcd(), "abcd"));
        CHECK(pair.lhs(0, 4) == R("1/16"));
        CHECK(pair.rhs(0, 4) == R("0"));
        CHECK(first_difference(pair.lhs, pair.rhs) == std::make_pair(std::size_t{0}, std::size_t{4}));
        CHECK_FALSE(pair.equal());
        CHECK_THROWS_AS(circular_inverse_alternate_check(C(abcd(), "abcd")), std::invalid_argument);
    }

    TEST_CASE("power") {
        CHECK(circular_power_check(C(ab(), "ab"), 2));
        CHECK(power_pair(C(ab(), "ab"), 2).lhs == M({{"1", "2", "2"}, {"0", "1", "2"}, {"0", "0", "1"}}));
        CHECK(circular_power_check(C(abc(), "cabacb"), 1));
        CHECK(circular_power_check(C(abc(), "cabacb"), 3));
        const auto pair = power_pair(C(abcd(), "abcd"), 2);
        CHECK(pair.lhs(0, 4) == R("2"));
        CHECK(pair.rhs(0, 4) == R("33/16"));
        CHECK(first_difference(pair.lhs, pair.rhs) == std::make_pair(std::size_t{0}, std::size_t{4}));
        CHECK_THROWS_AS(circular_power_check(C(abcd(), "abcd"), 2), std::invalid_argument);
        CHECK_THROWS_AS(power_pair(C(ab(), "ab"), 0), std::invalid_argument);
    }

    TEST_CASE("weak ratio") {
        CHECK(weak_ratio(W(ab(), "ab"), W(ab(), "ab")));
        CHECK(weak_ratio(W(ab(), "ab"), W(ab(), "ba")));
        CHECK(circular_parikh_matrix(C(ab(), "abba")) ==
              circular_parikh_matrix(C(ab(), "ab")) * circular_parikh_matrix(C(ab(), "ba")));
        CHECK_FALSE(weak_ratio(W(ab(), "a"), W(ab(), "b")));
        const auto product = circular_parikh_matrix(C(ab(), "a")) * circular_parikh_matrix(C(ab(), "b"));
        CHECK(product(0, 2) == R("1"));
        CHECK(circular_parikh_matrix(C(ab(), "ab"))(0, 2) == R("1/2"));
        CHECK_THROWS_AS(weak_ratio(W(abc(), "a"), W(abc(), "b")), std::invalid_argument);
    }

    TEST_CASE("product identity") {
        CHECK(product_identity_check(C(abc(), "abcabc")));
        CHECK(product_identity_check(C(abc(), "cabacb")));
        CHECK(product_identity_check(C(abc(), "aabba")));
        Rational sum;
        for (const char* p : {"abc", "acb", "bac", "bca", "cab", "cba"}) sum += oracle::class_average("abcabc", p);
        CHECK(sum == R("8"));
        CHECK(product_identity_check(C(abcd(), "abdcdbca")));
    }

    TEST_CASE("slender partition") {
        CHECK(slender_representatives(abc()).size() == 2);
        CHECK(slender_representatives(abcd()).size() == 6);
        CHECK(slender_partition_check(C(abc(), "cabacb")));
        CHECK(oracle::brute_direct("cabacb", "abc") + oracle::brute_direct("cabacb", "acb") == 8);
        CHECK(slender_partition_check(C(abc(), "aab")));
        oracle::each_string("ab", 10, [&](const std::string& s) {
            const auto cw = C(ab(), s.c_str());
            const BigInt na(static_cast<unsigned long>(cw.canonical().count(0)));
            const BigInt nb(static_cast<unsigned long>(cw.canonical().count(1)));
            REQUIRE(direct_count(cw, W(ab(), "ab")) == na * nb);
        });
        CHECK(slender_partition_check(C(abcd(), "dacbbcad")));
    }
}
