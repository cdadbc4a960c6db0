#include "circparikh/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace circparikh {

std::string matrix_to_json(const UnitriangularMatrix& matrix) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& row : matrix.rows()) {
        nlohmann::json out_row = nlohmann::json::array();
        for (const auto& value : row) out_row.push_back(value.to_string());
        entries.push_back(std::move(out_row));
    }
    nlohmann::json doc = {{"dim", matrix.dim()}, {"entries", std::move(entries)}};
    return doc.dump();
}

UnitriangularMatrix matrix_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
        throw std::invalid_argument("matrix JSON needs \"dim\" and \"entries\"");
    }
    if (!doc["dim"].is_number_unsigned()) throw std::invalid_argument("matrix JSON: dim must be a non-negative integer");
    const auto dim = doc["dim"].get<std::size_t>();
    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != dim) throw std::invalid_argument("matrix JSON: entries must have dim rows");

    std::vector<std::vector<Rational>> rows;
    rows.reserve(dim);
    for (const auto& row : entries) {
        if (!row.is_array()) throw std::invalid_argument("matrix JSON: each row must be an array");
        auto& out = rows.emplace_back();
        for (const auto& cell : row) {
            if (!cell.is_string()) throw std::invalid_argument("matrix JSON: entries must be rational strings");
            out.push_back(Rational::parse(cell.get<std::string>()));
        }
    }
    return UnitriangularMatrix::from_rows(rows);
}

}  // namespace circparikh
