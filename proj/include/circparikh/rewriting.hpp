#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circparikh/circular.hpp"
#include "circparikh/rational.hpp"
#include "circparikh/word.hpp"

namespace circparikh {

// All rules are stated for a ternary alphabet a < b < c (letters 0, 1, 2).

enum class Rule { E1, E2, CE1, CE2 };

std::string to_string(Rule rule);

/// One matched site of a swap rule.
///
/// For CE1 the representative reads x.ac.y.ca and the result x.ca.y.ac; for CE2
/// it reads x.(alpha b).y.(b alpha) and the result x.(b alpha).y.(alpha b).
/// For the linear rules the swapped pairs sit at x_length (and, for E2,
/// x_length + 2 + y_length); `valid` is always true.
struct RuleApplication {
    Rule rule = Rule::CE1;
    /// Shift of the canonical word that produced `representative` (circular rules).
    std::size_t rotation = 0;
    std::size_t x_length = 0;
    std::size_t y_length = 0;
    std::optional<Letter> alpha;
    std::int64_t condition_lhs = 0;
    std::int64_t condition_rhs = 0;
    bool valid = true;
    Word representative;
    Word result;

    CircularWord result_class() const { return CircularWord(result); }
    /// "CE1@r=1,|x|=2" / "CE2@r=0,α=a"
    std::string label() const;
};

/// Rule E1 in both directions: x.ac.y <-> x.ca.y. Distinct results, sorted.
std::vector<Word> apply_e1(const Word& w);

/// Rule E2 in both directions: x.(alpha b).y.(b alpha).z <-> x.(b alpha).y.(alpha b).z
/// with alpha in {a, c} and y over {alpha, b}. Distinct results, sorted.
std::vector<Word> apply_e2(const Word& w);

/// Every CE1 site over every distinct rotation of the canonical word, valid or not.
std::vector<RuleApplication> find_ce1(const CircularWord& cw);

/// Every CE2 site over every distinct rotation of the canonical word, valid or not.
std::vector<RuleApplication> find_ce2(const CircularWord& cw);

/// |y|_b (|x|_a - |x|_c) and |x|_b (|y|_a - |y|_c).
std::pair<std::int64_t, std::int64_t> ce1_condition(const Word& x, const Word& y);

/// |x|_abar (|y| + |y|_b + 3) and |y|_abar (|x| + |x|_b + 3), abar the letter of {a, c} other than alpha.
std::pair<std::int64_t, std::int64_t> ce2_condition(const Word& x, const Word& y, Letter alpha);

struct NaiveFailure {
    std::string rule;
    CircularWord before;
    CircularWord after;
    Word pattern;
    Rational before_count;
    Rational after_count;
    bool m_equivalent = false;
};

/// The two documented cases where E1 and E2 applied around a circle break
/// M-equivalence, followed by a reflexive control pair.
std::vector<NaiveFailure> naive_rule_failure_examples();

struct RewriteEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    RuleApplication application;
};

struct RewriteGraph {
    std::vector<CircularWord> nodes;
    std::vector<RewriteEdge> edges;
    bool truncated = false;

    std::string to_dot() const;
};

struct RuleSelection {
    bool ce1 = true;
    bool ce2 = true;
};

/// Breadth-first closure of the valid CE1/CE2 applications starting from cw.
/// Nodes appear in discovery order; one edge per unordered node pair, self-loops
/// dropped. Stops growing once max_nodes nodes exist (truncated is then set).
RewriteGraph rewrite_closure(const CircularWord& cw, RuleSelection rules = {}, std::size_t max_nodes = 100000);

/// Psi(x) == Psi(y): a sufficient condition for [x.ab.y.ba] and [x.ba.y.ab]
/// (a, b the distinct letters alpha, beta) to be M-equivalent.
bool parikh_vector_sufficiency(const Word& x, const Word& y, Letter alpha, Letter beta);

/// The pair ([x alpha beta y beta alpha], [x beta alpha y alpha beta]).
std::pair<CircularWord, CircularWord> swap_pair(const Word& x, const Word& y, Letter alpha, Letter beta);

}  // namespace circparikh
