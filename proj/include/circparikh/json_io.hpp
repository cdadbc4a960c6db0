#pragma once

#include <string>
#include <string_view>

#include "circparikh/unitriangular.hpp"

namespace circparikh {

/// Compact JSON: {"dim":n,"entries":[["1","1/2",...],...]} with every entry
/// written as an exact rational string.
std::string matrix_to_json(const UnitriangularMatrix& matrix);

/// Inverse of matrix_to_json; throws std::invalid_argument on malformed input
/// or a matrix that is not unitriangular.
UnitriangularMatrix matrix_from_json(std::string_view text);

}  // namespace circparikh
