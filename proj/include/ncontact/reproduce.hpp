#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncontact/report.hpp"
#include "ncontact/sparse_poly.hpp"

namespace ncontact {

/// "4.1" ... "4.5", "5.1" ... "5.3".
const std::vector<std::string>& reproducible_sections();

/// Replays one worked example against its embedded fixtures. UnknownSection
/// for any other id.
Report reproduce(const std::string& section);

/// Compares canonical scalar forms; describes the first differing
/// coefficient (canonical term order) or returns nullopt when equal.
std::optional<std::string> first_difference(const BiPoly& expected, const BiPoly& actual);

}  // namespace ncontact
