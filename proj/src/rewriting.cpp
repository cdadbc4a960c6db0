#include "circparikh/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace circparikh {

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;
constexpr Letter kC = 2;

void require_ternary(const Alphabet& alphabet, const char* rule) {
    if (alphabet->size() != 3) throw std::invalid_argument(std::string(rule) + " needs a ternary alphabet");
}

std::int64_t count_of(const Word& w, Letter l) { return static_cast<std::int64_t>(w.count(l)); }

bool pair_at(std::span<const Letter> s, std::size_t pos, Letter first, Letter second) {
    return pos + 1 < s.size() && s[pos] == first && s[pos + 1] == second;
}

Word swapped(const Word& w, std::initializer_list<std::size_t> positions) {
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    for (auto p : positions) std::swap(letters[p], letters[p + 1]);
    return Word(w.alphabet(), std::move(letters));
}

bool only_letters(std::span<const Letter> s, std::size_t begin, std::size_t end, Letter l1, Letter l2) {
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(begin), s.begin() + static_cast<std::ptrdiff_t>(end),
                       [&](Letter l) { return l == l1 || l == l2; });
}

std::vector<Word> sorted_unique(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

}  // namespace

std::string to_string(Rule rule) {
    switch (rule) {
        case Rule::E1: return "E1";
        case Rule::E2: return "E2";
        case Rule::CE1: return "CE1";
        case Rule::CE2: return "CE2";
    }
    return "?";
}

std::string RuleApplication::label() const {
    std::string out = to_string(rule) + "@r=" + std::to_string(rotation);
    if (rule == Rule::CE2 || rule == Rule::E2) {
        out += ",α=" + representative.alphabet()->symbol(alpha.value_or(kA));
    } else {
        out += ",|x|=" + std::to_string(x_length);
    }
    return out;
}

std::vector<Word> apply_e1(const Word& w) {
    require_ternary(w.alphabet(), "rule E1");
    auto s = w.letters();
    std::vector<Word> out;
    for (std::size_t p = 0; p + 1 < s.size(); ++p) {
        if (pair_at(s, p, kA, kC) || pair_at(s, p, kC, kA)) out.push_back(swapped(w, {p}));
    }
    return sorted_unique(std::move(out));
}

std::vector<Word> apply_e2(const Word& w) {
    require_ternary(w.alphabet(), "rule E2");
    auto s = w.letters();
    std::vector<Word> out;
    for (Letter alpha : {kA, kC}) {
        // Forward reads (alpha b) ... (b alpha); backward reads (b alpha) ... (alpha b).
        for (bool forward : {true, false}) {
            const Letter f1 = forward ? alpha : kB, f2 = forward ? kB : alpha;
            for (std::size_t p = 0; p + 1 < s.size(); ++p) {
                if (!pair_at(s, p, f1, f2)) continue;
                for (std::size_t q = p + 2; q + 1 < s.size(); ++q) {
                    if (!only_letters(s, p + 2, q, alpha, kB)) break;
                    if (pair_at(s, q, f2, f1)) out.push_back(swapped(w, {p, q}));
                }
            }
        }
    }
    return sorted_unique(std::move(out));
}

std::pair<std::int64_t, std::int64_t> ce1_condition(const Word& x, const Word& y) {
    return {count_of(y, kB) * (count_of(x, kA) - count_of(x, kC)), count_of(x, kB) * (count_of(y, kA) - count_of(y, kC))};
}

std::pair<std::int64_t, std::int64_t> ce2_condition(const Word& x, const Word& y, Letter alpha) {
    if (alpha != kA && alpha != kC) throw std::invalid_argument("CE2 needs alpha in {a, c}");
    const Letter other = alpha == kA ? kC : kA;
    const auto xl = static_cast<std::int64_t>(x.size()), yl = static_cast<std::int64_t>(y.size());
    return {count_of(x, other) * (yl + count_of(y, kB) + 3), count_of(y, other) * (xl + count_of(x, kB) + 3)};
}

std::vector<RuleApplication> find_ce1(const CircularWord& cw) {
    require_ternary(cw.alphabet(), "rule CE1");
    std::vector<RuleApplication> out;
    const std::size_t n = cw.length();
    if (n < 4) return out;
    for (std::size_t r = 0; r < cw.class_size(); ++r) {
        const Word rep = cyclic_shift(cw.canonical(), r);
        auto s = rep.letters();
        if (!pair_at(s, n - 2, kC, kA)) continue;
        for (std::size_t p = 0; p + 4 <= n; ++p) {
            if (!pair_at(s, p, kA, kC)) continue;
            const Word x = rep.slice(0, p);
            const Word y = rep.slice(p + 2, n - p - 4);
            auto [lhs, rhs] = ce1_condition(x, y);
            out.push_back(RuleApplication{.rule = Rule::CE1,
                                          .rotation = r,
                                          .x_length = x.size(),
                                          .y_length = y.size(),
                                          .alpha = std::nullopt,
                                          .condition_lhs = lhs,
                                          .condition_rhs = rhs,
                                          .valid = lhs == rhs,
                                          .representative = rep,
                                          .result = swapped(rep, {p, n - 2})});
        }
    }
    return out;
}

std::vector<RuleApplication> find_ce2(const CircularWord& cw) {
    require_ternary(cw.alphabet(), "rule CE2");
    std::vector<RuleApplication> out;
    const std::size_t n = cw.length();
    if (n < 4) return out;
    for (std::size_t r = 0; r < cw.class_size(); ++r) {
        const Word rep = cyclic_shift(cw.canonical(), r);
        auto s = rep.letters();
        for (Letter alpha : {kA, kC}) {
            if (!pair_at(s, n - 2, kB, alpha)) continue;
            for (std::size_t p = 0; p + 4 <= n; ++p) {
                if (!pair_at(s, p, alpha, kB)) continue;
                const Word x = rep.slice(0, p);
                const Word y = rep.slice(p + 2, n - p - 4);
                auto [lhs, rhs] = ce2_condition(x, y, alpha);
                out.push_back(RuleApplication{.rule = Rule::CE2,
                                              .rotation = r,
                                              .x_length = x.size(),
                                              .y_length = y.size(),
                                              .alpha = alpha,
                                              .condition_lhs = lhs,
                                              .condition_rhs = rhs,
                                              .valid = lhs == rhs,
                                              .representative = rep,
                                              .result = swapped(rep, {p, n - 2})});
            }
        }
    }
    return out;
}

std::vector<NaiveFailure> naive_rule_failure_examples() {
    const Alphabet abc = make_alphabet("a,b,c");
    auto make = [&](const char* rule, const char* before, const char* after, const char* pattern) {
        NaiveFailure f{rule,
                       CircularWord(Word::parse(abc, before)),
                       CircularWord(Word::parse(abc, after)),
                       Word::parse(abc, pattern),
                       Rational{},
                       Rational{},
                       false};
        f.before_count = avg_count(f.before, f.pattern);
        f.after_count = avg_count(f.after, f.pattern);
        f.m_equivalent = m_equivalent(f.before, f.after);
        return f;
    };
    return {make("E1", "acb", "cab", "ab"), make("E2", "abbac", "baabc", "abc"), make("control", "abab", "abab", "ab")};
}

RewriteGraph rewrite_closure(const CircularWord& cw, RuleSelection rules, std::size_t max_nodes) {
    require_ternary(cw.alphabet(), "rewrite closure");
    RewriteGraph graph;
    std::map<CircularWord, std::size_t> index;
    std::set<std::pair<std::size_t, std::size_t>> seen_edges;
    std::deque<std::size_t> frontier;

    graph.nodes.push_back(cw);
    index.emplace(cw, 0);
    frontier.push_back(0);

    while (!frontier.empty()) {
        const std::size_t current = frontier.front();
        frontier.pop_front();
        std::vector<RuleApplication> apps;
        if (rules.ce1) apps = find_ce1(graph.nodes[current]);
        if (rules.ce2) {
            auto more = find_ce2(graph.nodes[current]);
            apps.insert(apps.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
        }
        for (auto& app : apps) {
            if (!app.valid) continue;
            CircularWord target = app.result_class();
            auto it = index.find(target);
            std::size_t target_id;
            if (it == index.end()) {
                if (graph.nodes.size() >= max_nodes) {
                    graph.truncated = true;
                    continue;
                }
                target_id = graph.nodes.size();
                graph.nodes.push_back(target);
                index.emplace(std::move(target), target_id);
                frontier.push_back(target_id);
            } else {
                target_id = it->second;
            }
            if (target_id == current) continue;
            auto key = std::minmax(current, target_id);
            if (!seen_edges.insert(key).second) continue;
            graph.edges.push_back({current, target_id, std::move(app)});
        }
    }
    return graph;
}

std::string RewriteGraph::to_dot() const {
    std::ostringstream os;
    os << "graph rewrite {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << nodes[i].to_string() << "\"];\n";
    }
    for (const auto& e : edges) {
        os << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.application.label() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

bool parikh_vector_sufficiency(const Word& x, const Word& y, Letter alpha, Letter beta) {
    require_same_alphabet(x, y);
    require_ternary(x.alphabet(), "Parikh vector criterion");
    if (alpha == beta || alpha >= 3 || beta >= 3) throw std::invalid_argument("alpha and beta must be distinct letters");
    return parikh_vector(x) == parikh_vector(y);
}

std::pair<CircularWord, CircularWord> swap_pair(const Word& x, const Word& y, Letter alpha, Letter beta) {
    require_same_alphabet(x, y);
    const Word ab(x.alphabet(), {alpha, beta});
    const Word ba(x.alphabet(), {beta, alpha});
    return {CircularWord(x + ab + y + ba), CircularWord(x + ba + y + ab)};
}

}  // namespace circparikh
