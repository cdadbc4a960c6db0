// parikh: command-line front end for the circparikh library.
//
// Exit codes: 0 ok, 1 not equivalent, 2 verification failure, 64 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "circparikh/enumeration.hpp"
#include "circparikh/json_io.hpp"
#include "circparikh/report_io.hpp"
#include "circparikh/rewriting.hpp"
#include "circparikh/suites.hpp"
#include "json.hpp"

using namespace circparikh;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kVerifyFailed = 2;
constexpr int kUsage = 64;
constexpr int kSoftware = 70;

// Largest partition the classes command will build.
constexpr unsigned long kMaxNecklaces = 2'000'000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Alphabet alphabet_from(const std::string& text) { return text.empty() ? make_alphabet("a,b,c") : make_alphabet(text); }

// "[w]" and "w" mean the same word; whether it is read circularly is up to the command.
Word word_from(const Alphabet& alphabet, std::string text) {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    return Word::parse(alphabet, text);
}

void require_ternary(const Alphabet& alphabet) {
    if (alphabet->size() != 3) throw UsageError("rules need a three-letter alphabet, got " + alphabet->to_string());
}

std::string matrix_text(const UnitriangularMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
        os << '\n';
    }
    return os.str();
}

std::string describe(const RuleApplication& app, const Alphabet& alphabet) {
    const auto& rep = app.representative;
    const Word x = rep.slice(0, app.x_length);
    const Word y = rep.slice(app.x_length + 2, app.y_length);
    std::ostringstream os;
    os << app.label() << " rep=" << rep.to_string() << " x=" << (x.size() ? x.to_string() : "λ")
       << " y=" << (y.size() ? y.to_string() : "λ");
    if (app.alpha) os << " α=" << alphabet->symbol(*app.alpha);
    os << " condition " << app.condition_lhs << (app.valid ? " = " : " != ") << app.condition_rhs << ' '
       << (app.valid ? "valid" : "invalid") << " -> " << app.result_class().to_string();
    return os.str();
}

std::string join_one_based(const std::vector<std::size_t>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i] + 1);
    return out + "}";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parikh matrices of linear and circular words"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    int status = kOk;

    // count
    std::string count_alphabet, count_mode = "average", count_word, count_sub;
    auto* count = app.add_subcommand("count", "Occurrences of a subword in a word");
    count->add_option("-a,--alphabet", count_alphabet, "Ordered alphabet, comma separated (default a,b,c)");
    count->add_option("--mode", count_mode, "direct, average or linear")
        ->check(CLI::IsMember({"direct", "average", "linear"}));
    count->add_option("word", count_word, "Text word, \"[w]\" or w")->required();
    count->add_option("subword", count_sub, "Pattern word")->required();
    count->callback([&] {
        const auto alphabet = alphabet_from(count_alphabet);
        const Word w = word_from(alphabet, count_word);
        const Word v = word_from(alphabet, count_sub);
        if (count_mode == "linear") {
            std::cout << count_subword(w, v) << '\n';
        } else if (count_mode == "direct") {
            std::cout << direct_count(CircularWord(w), v) << '\n';
        } else {
            std::cout << avg_count(CircularWord(w), v) << '\n';
        }
    });

    // matrix
    std::string matrix_alphabet, matrix_word, matrix_format = "text";
    bool matrix_circular = false;
    auto* matrix = app.add_subcommand("matrix", "Parikh matrix of a word");
    matrix->add_option("-a,--alphabet", matrix_alphabet, "Ordered alphabet (default a,b,c)");
    matrix->add_flag("--circular", matrix_circular, "Use the circular Parikh matrix of [w]");
    matrix->add_option("--format", matrix_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    matrix->add_option("word", matrix_word, "Word")->required();
    matrix->callback([&] {
        const auto alphabet = alphabet_from(matrix_alphabet);
        const Word w = word_from(alphabet, matrix_word);
        const auto m = matrix_circular ? circular_parikh_matrix(CircularWord(w)) : parikh_matrix(w);
        if (matrix_format == "json") {
            std::cout << matrix_to_json(m) << '\n';
        } else {
            std::cout << matrix_text(m);
        }
    });

    // mequiv
    std::string mequiv_alphabet, mequiv_lhs, mequiv_rhs;
    bool mequiv_linear = false;
    auto* mequiv = app.add_subcommand("mequiv", "Compare the Parikh matrices of two circular words");
    mequiv->add_option("-a,--alphabet", mequiv_alphabet, "Ordered alphabet (default a,b,c)");
    mequiv->add_flag("--linear", mequiv_linear, "Compare linear Parikh matrices instead");
    mequiv->add_option("first", mequiv_lhs, "First word")->required();
    mequiv->add_option("second", mequiv_rhs, "Second word")->required();
    mequiv->callback([&] {
        const auto alphabet = alphabet_from(mequiv_alphabet);
        const Word u = word_from(alphabet, mequiv_lhs);
        const Word v = word_from(alphabet, mequiv_rhs);
        const auto a = mequiv_linear ? parikh_matrix(u) : circular_parikh_matrix(CircularWord(u));
        const auto b = mequiv_linear ? parikh_matrix(v) : circular_parikh_matrix(CircularWord(v));
        if (const auto diff = first_difference(a, b)) {
            const auto [i, j] = *diff;
            std::cout << "entry (" << i + 1 << ',' << j + 1 << "): " << a(i, j) << " vs " << b(i, j) << '\n';
            status = kNegative;
        } else {
            std::cout << "EQUIVALENT\n";
        }
    });

    // rules
    std::string rules_alphabet, rules_word, rules_rule = "all", rules_dot;
    bool rules_closure = false, rules_linear = false;
    std::size_t rules_max_steps = 100000;
    auto* rules = app.add_subcommand("rules", "Rule applications on a ternary word");
    rules->add_option("-a,--alphabet", rules_alphabet, "Ordered three-letter alphabet (default a,b,c)");
    rules->add_option("--rule", rules_rule, "CE1, CE2 or all; E1, E2 or all with --linear")
        ->check(CLI::IsMember({"all", "CE1", "CE2", "E1", "E2"}));
    rules->add_flag("--closure", rules_closure, "Emit the rewrite closure as a DOT graph");
    rules->add_option("--dot", rules_dot, "Write the closure graph to this path");
    rules->add_option("--max-steps", rules_max_steps, "Node cap for the closure")->check(CLI::PositiveNumber);
    rules->add_flag("--linear", rules_linear, "Apply the linear rules E1/E2 instead");
    rules->add_option("word", rules_word, "Word")->required();
    rules->callback([&] {
        const auto alphabet = alphabet_from(rules_alphabet);
        require_ternary(alphabet);
        const Word w = word_from(alphabet, rules_word);
        const bool want1 = rules_rule == "all" || rules_rule == "CE1" || rules_rule == "E1";
        const bool want2 = rules_rule == "all" || rules_rule == "CE2" || rules_rule == "E2";
        if (rules_linear) {
            if (rules_rule.rfind("CE", 0) == 0) throw UsageError("--linear takes E1 or E2");
            if (rules_closure || !rules_dot.empty()) throw UsageError("--closure applies to circular rules only");
            std::size_t shown = 0;
            auto show = [&](const char* name, const std::vector<Word>& out) {
                for (const auto& u : out) {
                    std::cout << name << " -> " << u.to_string() << '\n';
                    ++shown;
                }
            };
            if (want1) show("E1", apply_e1(w));
            if (want2) show("E2", apply_e2(w));
            if (!shown) std::cout << "no applications\n";
            return;
        }
        if (rules_rule == "E1" || rules_rule == "E2") throw UsageError("E1 and E2 need --linear");
        const CircularWord cw(w);
        if (rules_closure || !rules_dot.empty()) {
            const auto graph = rewrite_closure(cw, RuleSelection{want1, want2}, rules_max_steps);
            const auto dot = graph.to_dot();
            if (rules_dot.empty()) {
                std::cout << dot;
            } else {
                write_text(rules_dot, dot);
                std::cout << graph.nodes.size() << " nodes, " << graph.edges.size() << " edges"
                          << (graph.truncated ? " (truncated)" : "") << '\n';
            }
            return;
        }
        std::vector<RuleApplication> apps;
        if (want1) apps = find_ce1(cw);
        if (want2) {
            auto more = find_ce2(cw);
            apps.insert(apps.end(), more.begin(), more.end());
        }
        if (apps.empty()) std::cout << "no applications\n";
        for (const auto& a : apps) std::cout << describe(a, alphabet) << '\n';
    });

    // classes
    std::string classes_alphabet, classes_format = "text";
    std::size_t classes_length = 0;
    auto* classes = app.add_subcommand("classes", "Partition necklaces of one length by circular Parikh matrix");
    classes->add_option("-a,--alphabet", classes_alphabet, "Ordered alphabet (default a,b,c)");
    classes->add_option("-n,--length", classes_length, "Necklace length")->required();
    classes->add_option("--format", classes_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    classes->callback([&] {
        const auto alphabet = alphabet_from(classes_alphabet);
        if (necklace_count(alphabet->size(), classes_length) > kMaxNecklaces)
            throw UsageError("too many necklaces at length " + std::to_string(classes_length));
        const auto report = partition_by_matrix(alphabet, classes_length);
        if (classes_format == "json") {
            std::cout << report_to_json(report) << '\n';
        } else if (classes_format == "csv") {
            std::cout << report_to_csv(report);
        } else {
            std::cout << "length " << report.length << ": " << report.necklace_count() << " necklaces, "
                      << report.class_count() << " classes, largest " << report.largest_class() << ", "
                      << report.singleton_count() << " singletons\n";
            for (const auto& [key, members] : report.classes) {
                std::cout << key << ':';
                for (const auto& cw : members) std::cout << ' ' << cw.to_string();
                std::cout << '\n';
            }
        }
    });

    // verify
    std::string verify_suite = "all", verify_format = "text";
    std::optional<std::size_t> verify_length, verify_split;
    std::optional<unsigned long> verify_power;
    std::size_t verify_cap = 10;
    auto* verify = app.add_subcommand("verify", "Run exhaustive property suites");
    verify->add_option("--suite", verify_suite, "Suite name or all");
    verify->add_option("--max-length", verify_length, "Longest word enumerated");
    verify->add_option("--max-split", verify_split, "Largest |x|+|y| for the swap-rule suites");
    verify->add_option("--max-power", verify_power, "Largest exponent for the power suite")
        ->check(CLI::PositiveNumber);
    verify->add_option("--cap", verify_cap, "Failure witnesses kept per suite");
    verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] {
        const auto& known = suite_names();
        std::vector<std::string> chosen;
        if (verify_suite == "all") {
            chosen = known;
        } else if (std::find(known.begin(), known.end(), verify_suite) != known.end()) {
            chosen.push_back(verify_suite);
        } else {
            throw UsageError("unknown suite '" + verify_suite + "'");
        }
        SuiteLimits limits;
        limits.max_length = verify_length;
        limits.max_split = verify_split;
        limits.max_power = verify_power;
        limits.failure_cap = verify_cap;
        nlohmann::json all = nlohmann::json::array();
        bool ok = true;
        for (const auto& name : chosen) {
            const auto result = run_suite(name, limits);
            ok = ok && result.passed();
            if (verify_format == "json") {
                all.push_back(nlohmann::json::parse(suite_to_json(result)));
            } else {
                std::cout << result.summary() << '\n';
                for (const auto& f : result.failures) std::cout << "  " << f << '\n';
                std::cout.flush();
            }
        }
        if (verify_format == "json") std::cout << all.dump(2) << '\n';
        if (!ok) status = kVerifyFailed;
    });

    // search-minor
    std::string minor_alphabet, minor_format = "text";
    std::size_t minor_length = 8;
    auto* search = app.add_subcommand("search-minor", "Look for a negative minor of a circular Parikh matrix");
    search->add_option("-a,--alphabet", minor_alphabet, "Ordered alphabet (default a,b,c)");
    search->add_option("--max-length", minor_length, "Longest necklace searched");
    search->add_option("--format", minor_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    search->callback([&] {
        const auto result = search_negative_minor(alphabet_from(minor_alphabet), minor_length);
        if (minor_format == "json") {
            std::cout << minor_search_to_json(result) << '\n';
            return;
        }
        if (result.witness) {
            const auto& w = *result.witness;
            std::cout << "witness " << w.word.to_string() << " rows " << join_one_based(w.rows) << " cols "
                      << join_one_based(w.cols) << " minor " << w.value << '\n';
        } else {
            std::cout << "none found\n";
        }
        std::cout << "checked " << result.necklaces_checked << " necklaces, " << result.minors_checked
                  << " minors up to length " << result.max_length << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kSoftware;
    }
    return status;
}
