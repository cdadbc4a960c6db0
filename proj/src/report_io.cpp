#include "circparikh/report_io.hpp"

#include <sstream>

#include "json.hpp"

namespace circparikh {

std::string report_to_json(const MEquivClassReport& report) {
    nlohmann::json classes = nlohmann::json::object();
    for (const auto& [key, members] : report.classes) {
        auto& list = classes[key] = nlohmann::json::array();
        for (const auto& cw : members) list.push_back(cw.to_string());
    }
    nlohmann::json doc = {
        {"alphabet", report.alphabet->symbols()},
        {"length", report.length},
        {"classes", std::move(classes)},
        {"stats",
         {{"necklaces", report.necklace_count()},
          {"classes", report.class_count()},
          {"largest_class", report.largest_class()},
          {"singletons", report.singleton_count()}}},
    };
    return doc.dump(2);
}

std::string report_to_csv(const MEquivClassReport& report) {
    std::ostringstream os;
    os << "necklace,class_size,matrix_key\n";
    for (const auto& [key, members] : report.classes) {
        for (const auto& cw : members) {
            os << cw.to_string() << ',' << members.size() << ",\"" << key << "\"\n";
        }
    }
    return os.str();
}

std::string suite_to_json(const SuiteResult& result) {
    nlohmann::json doc = {
        {"suite", result.name},
        {"passed", result.passed()},
        {"checked", result.checked},
        {"failure_count", result.failure_count},
        {"failures", result.failures},
        {"elapsed_ms", result.elapsed.count()},
    };
    return doc.dump(2);
}

std::string minor_search_to_json(const MinorSearchResult& result) {
    nlohmann::json doc = {
        {"max_length", result.max_length},
        {"necklaces_checked", result.necklaces_checked},
        {"minors_checked", result.minors_checked},
    };
    if (result.witness) {
        const auto& w = *result.witness;
        std::vector<std::size_t> rows, cols;
        for (auto r : w.rows) rows.push_back(r + 1);
        for (auto c : w.cols) cols.push_back(c + 1);
        doc["witness"] = {{"word", w.word.to_string()}, {"rows", rows}, {"cols", cols}, {"value", w.value.to_string()}};
    } else {
        doc["witness"] = nullptr;
    }
    return doc.dump(2);
}

}  // namespace circparikh
