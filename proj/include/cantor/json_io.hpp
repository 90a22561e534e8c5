#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cantor/invariance.hpp"
#include "cantor/perm.hpp"
#include "cantor/tt.hpp"

namespace cantor {

using Json = nlohmann::ordered_json;

/// Parse with nlohmann errors rethrown as ParseError.
Json parse_json_text(std::string_view text);
/// CLI argument helper: inline JSON when the argument starts with '{' or
/// '[', otherwise the content of the file at that path.
Json load_json_arg(const std::string& arg);

Json table_to_json(const OutputTable& t);
OutputTable table_from_json(const Json& j);

/// {"outputs":[{"use":[...],"table":[...]}, ...]} or {"rule":"pair-and"}.
Json functional_to_json(const TruthTableFunctional& f);
TruthTableFunctional functional_from_json(const Json& j);

/// {"pairs":[[0,5],[5,0]]}; identity elsewhere.
Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json nat_table_to_json(const std::vector<std::size_t>& t);
std::vector<std::size_t> nat_table_from_json(const Json& j);

/// {"X":"head|period","Y":"head|period","a":a,"b":b}
Json counterexample_to_json(const UniformityCounterexample& c);

/// Registry: "identity" | "min-drop" | "shift" | "perm:<permutation json>".
CantorMap map_by_name(std::string_view name);

}  // namespace cantor
