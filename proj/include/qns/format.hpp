/// @file format.hpp
/// @brief Round-trip decimal formatting for CSV and report output.
#pragma once

#include <string>

namespace qns {

/// Shortest-safe "%.17g" rendering; identical input gives identical bytes.
std::string format_double(double v);

}  // namespace qns
