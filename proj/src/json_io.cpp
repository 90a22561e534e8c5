#include "cantor/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cantor {

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    return parse_json_text(arg);
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open file: " + arg);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

Json table_to_json(const OutputTable& t) {
  Json j;
  j["use"] = t.use;
  j["table"] = t.table;
  return j;
}

OutputTable table_from_json(const Json& j) {
  try {
    std::vector<std::size_t> use = j.at("use").get<std::vector<std::size_t>>();
    std::vector<std::uint8_t> table =
        j.at("table").get<std::vector<std::uint8_t>>();
    return make_table(std::move(use), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad output table: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("bad output table: ") + e.what());
  }
}

Json functional_to_json(const TruthTableFunctional& f) {
  Json j;
  if (!f.rule_name().empty()) {
    j["rule"] = f.rule_name();
    return j;
  }
  Json outputs = Json::array();
  for (const auto& t : f.outputs()) outputs.push_back(table_to_json(t));
  j["outputs"] = outputs;
  return j;
}

TruthTableFunctional functional_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("functional must be a JSON object");
  bool has_rule = j.contains("rule");
  bool has_outputs = j.contains("outputs");
  if (has_rule == has_outputs) {
    throw ParseError("functional needs exactly one of \"rule\", \"outputs\"");
  }
  if (has_rule) {
    std::string name;
    try {
      name = j.at("rule").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad rule: ") + e.what());
    }
    if (name == "pair-and") return pair_and_functional();
    throw ParseError("unknown rule: " + name);
  }
  std::vector<OutputTable> outputs;
  if (!j.at("outputs").is_array()) throw ParseError("outputs must be an array");
  for (const auto& item : j.at("outputs")) {
    outputs.push_back(table_from_json(item));
  }
  return TruthTableFunctional(std::move(outputs));
}

Json permutation_to_json(const Permutation& p) {
  Json pairs = Json::array();
  for (auto [n, image] : p.pairs()) {
    pairs.push_back(Json::array({n, image}));
  }
  Json j;
  j["pairs"] = pairs;
  return j;
}

Permutation permutation_from_json(const Json& j) {
  try {
    const Json& pairs = j.is_array() ? j : j.at("pairs");
    std::vector<std::pair<std::size_t, std::size_t>> raw;
    for (const auto& item : pairs) {
      raw.emplace_back(item.at(0).get<std::size_t>(),
                       item.at(1).get<std::size_t>());
    }
    return Permutation::from_pairs(raw);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad permutation: ") + e.what());
  }
}

Json nat_table_to_json(const std::vector<std::size_t>& t) { return Json(t); }

std::vector<std::size_t> nat_table_from_json(const Json& j) {
  try {
    return j.get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad table of naturals: ") + e.what());
  }
}

Json counterexample_to_json(const UniformityCounterexample& c) {
  Json j;
  j["X"] = c.x.str();
  j["Y"] = c.y.str();
  j["a"] = c.a;
  j["b"] = c.b;
  return j;
}

CantorMap map_by_name(std::string_view name) {
  if (name == "identity") return identity_map();
  if (name == "min-drop") return min_drop_map();
  if (name == "shift") return shift_map();
  constexpr std::string_view kPermPrefix = "perm:";
  if (name.substr(0, kPermPrefix.size()) == kPermPrefix) {
    Json j = parse_json_text(name.substr(kPermPrefix.size()));
    return induced_map_of(permutation_from_json(j));
  }
  throw ParseError("unknown map: \"" + std::string(name) +
                   "\" (expected identity, min-drop, shift, or perm:<json>)");
}

}  // namespace cantor
