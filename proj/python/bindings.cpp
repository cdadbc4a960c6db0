// Python bindings. Words and alphabets cross the boundary as strings; exact
// values come back as int or fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circparikh/enumeration.hpp"
#include "circparikh/json_io.hpp"
#include "circparikh/report_io.hpp"
#include "circparikh/rewriting.hpp"
#include "circparikh/suites.hpp"

namespace py = pybind11;
using namespace circparikh;

namespace {

constexpr const char* kDefaultAlphabet = "a,b,c";

Word parse_word(const std::string& alphabet, std::string text) {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    return Word::parse(make_alphabet(alphabet), text);
}

CircularWord parse_circular(const std::string& alphabet, const std::string& text) {
    return CircularWord(parse_word(alphabet, text));
}

py::object to_py(const BigInt& value) { return py::int_(py::str(value.get_str())); }

py::object to_py(const Rational& value) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(value.to_string());
}

py::list to_py(const UnitriangularMatrix& m) {
    py::list out;
    for (const auto& row : m.rows()) {
        py::list r;
        for (const auto& x : row) r.append(to_py(x));
        out.append(r);
    }
    return out;
}

py::object from_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

py::dict to_py(const RuleApplication& app, const OrderedAlphabet& alphabet) {
    const auto& rep = app.representative;
    py::dict d;
    d["rule"] = to_string(app.rule);
    d["label"] = app.label();
    d["rotation"] = app.rotation;
    d["representative"] = rep.to_string();
    d["x"] = rep.slice(0, app.x_length).to_string();
    d["y"] = rep.slice(app.x_length + 2, app.y_length).to_string();
    d["alpha"] = app.alpha ? py::object(py::str(alphabet.symbol(*app.alpha))) : py::object(py::none());
    d["condition"] = py::make_tuple(app.condition_lhs, app.condition_rhs);
    d["valid"] = app.valid;
    d["result"] = app.result_class().to_string();
    return d;
}

py::list applications(const std::vector<RuleApplication>& apps, const CircularWord& cw) {
    py::list out;
    for (const auto& a : apps) out.append(to_py(a, *cw.alphabet()));
    return out;
}

py::list words(const std::vector<Word>& ws) {
    py::list out;
    for (const auto& w : ws) out.append(w.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parikh matrices of linear and circular words";

    m.def(
        "count_subword",
        [](const std::string& w, const std::string& v, const std::string& alphabet) {
            return to_py(count_subword(parse_word(alphabet, w), parse_word(alphabet, v)));
        },
        py::arg("word"), py::arg("subword"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "direct_count",
        [](const std::string& w, const std::string& v, const std::string& alphabet) {
            return to_py(direct_count(parse_circular(alphabet, w), parse_word(alphabet, v)));
        },
        py::arg("word"), py::arg("subword"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "avg_count",
        [](const std::string& w, const std::string& v, const std::string& alphabet) {
            return to_py(avg_count(parse_circular(alphabet, w), parse_word(alphabet, v)));
        },
        py::arg("word"), py::arg("subword"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "parikh_vector",
        [](const std::string& w, const std::string& alphabet) { return parikh_vector(parse_word(alphabet, w)).counts; },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "parikh_matrix",
        [](const std::string& w, const std::string& alphabet) { return to_py(parikh_matrix(parse_word(alphabet, w))); },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "circular_parikh_matrix",
        [](const std::string& w, const std::string& alphabet) {
            return to_py(circular_parikh_matrix(parse_circular(alphabet, w)));
        },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "matrix_key",
        [](const std::string& w, const std::string& alphabet, bool circular) {
            return circular ? matrix_key(circular_parikh_matrix(parse_circular(alphabet, w)))
                            : matrix_key(parikh_matrix(parse_word(alphabet, w)));
        },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet, py::arg("circular") = true);
    m.def(
        "matrix_json",
        [](const std::string& w, const std::string& alphabet, bool circular) {
            return circular ? matrix_to_json(circular_parikh_matrix(parse_circular(alphabet, w)))
                            : matrix_to_json(parikh_matrix(parse_word(alphabet, w)));
        },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet, py::arg("circular") = true);
    m.def(
        "binary_closed_form",
        [](unsigned long na, unsigned long nb) { return to_py(binary_closed_form(BigInt(na), BigInt(nb))); },
        py::arg("na"), py::arg("nb"));
    m.def(
        "canonicalize", [](const std::string& w, const std::string& alphabet) { return parse_circular(alphabet, w).to_string(); },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "m_equivalent",
        [](const std::string& u, const std::string& v, const std::string& alphabet, bool linear) {
            if (linear) return parikh_matrix(parse_word(alphabet, u)) == parikh_matrix(parse_word(alphabet, v));
            return m_equivalent(parse_circular(alphabet, u), parse_circular(alphabet, v));
        },
        py::arg("first"), py::arg("second"), py::arg("alphabet") = kDefaultAlphabet, py::arg("linear") = false);

    m.def(
        "apply_e1", [](const std::string& w, const std::string& alphabet) { return words(apply_e1(parse_word(alphabet, w))); },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "apply_e2", [](const std::string& w, const std::string& alphabet) { return words(apply_e2(parse_word(alphabet, w))); },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "find_ce1",
        [](const std::string& w, const std::string& alphabet) {
            const auto cw = parse_circular(alphabet, w);
            return applications(find_ce1(cw), cw);
        },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "find_ce2",
        [](const std::string& w, const std::string& alphabet) {
            const auto cw = parse_circular(alphabet, w);
            return applications(find_ce2(cw), cw);
        },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "rewrite_closure",
        [](const std::string& w, const std::string& alphabet, bool ce1, bool ce2, std::size_t max_nodes) {
            const auto graph = rewrite_closure(parse_circular(alphabet, w), RuleSelection{ce1, ce2}, max_nodes);
            py::list nodes;
            for (const auto& n : graph.nodes) nodes.append(n.to_string());
            py::list edges;
            for (const auto& e : graph.edges) edges.append(py::make_tuple(e.from, e.to, e.application.label()));
            py::dict d;
            d["nodes"] = nodes;
            d["edges"] = edges;
            d["truncated"] = graph.truncated;
            d["dot"] = graph.to_dot();
            return d;
        },
        py::arg("word"), py::arg("alphabet") = kDefaultAlphabet, py::arg("ce1") = true, py::arg("ce2") = true,
        py::arg("max_nodes") = 100000);

    m.def(
        "enumerate_necklaces",
        [](std::size_t n, const std::string& alphabet) {
            py::list out;
            for (const auto& cw : enumerate_necklaces(make_alphabet(alphabet), n)) out.append(cw.to_string());
            return out;
        },
        py::arg("length"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "necklace_count", [](std::size_t s, std::size_t n) { return to_py(necklace_count(s, n)); },
        py::arg("alphabet_size"), py::arg("length"));
    m.def(
        "partition_by_matrix",
        [](std::size_t n, const std::string& alphabet) {
            return from_json(report_to_json(partition_by_matrix(make_alphabet(alphabet), n)));
        },
        py::arg("length"), py::arg("alphabet") = kDefaultAlphabet);
    m.def(
        "search_negative_minor",
        [](std::size_t max_n, const std::string& alphabet) {
            return from_json(minor_search_to_json(search_negative_minor(make_alphabet(alphabet), max_n)));
        },
        py::arg("max_length"), py::arg("alphabet") = kDefaultAlphabet);
    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::optional<std::size_t> max_length, std::optional<std::size_t> max_split,
           std::optional<unsigned long> max_power, std::size_t failure_cap) {
            SuiteLimits limits;
            limits.max_length = max_length;
            limits.max_split = max_split;
            limits.max_power = max_power;
            limits.failure_cap = failure_cap;
            SuiteResult result;
            {
                py::gil_scoped_release release;
                result = run_suite(name, limits);
            }
            return from_json(suite_to_json(result));
        },
        py::arg("name"), py::arg("max_length") = py::none(), py::arg("max_split") = py::none(),
        py::arg("max_power") = py::none(), py::arg("failure_cap") = 10);
}
