#pragma once

#include <string>

#include "json.hpp"

#include "gvz/analysis.hpp"
#include "gvz/char_table.hpp"

namespace gvz::report {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "report-v1";

/// Classes and irreducibles; `decimal` adds approximate complex values next to the exact ones.
Json table_json(const CharacterTable& table, bool decimal);
Json gvz_json(const GvzReport& report);
Json gcp_json(const GcpResult& result, const std::string& normal_description);
Json theorem_json(const TheoremReport& report);

std::string table_text(const CharacterTable& table, bool decimal);
std::string gvz_text(const GvzReport& report);
std::string theorem_text(const TheoremReport& report);

/// Fixed six-digit rendering of the complex value, for display only.
std::string decimal(const Cyclotomic& value);

}  // namespace gvz::report
