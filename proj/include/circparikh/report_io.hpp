#pragma once

#include <string>

#include "circparikh/enumeration.hpp"
#include "circparikh/suites.hpp"

namespace circparikh {

/// {"alphabet":[...],"classes":{key:[members]},"length":n,"stats":{...}}
std::string report_to_json(const MEquivClassReport& report);

/// Header "necklace,class_size,matrix_key" then one row per necklace in
/// class-key order; the key column is quoted because it contains commas.
std::string report_to_csv(const MEquivClassReport& report);

std::string suite_to_json(const SuiteResult& result);

std::string minor_search_to_json(const MinorSearchResult& result);

}  // namespace circparikh
