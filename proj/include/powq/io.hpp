#pragma once

#include <string>

#include <json.hpp>

#include "powq/group.hpp"
#include "powq/power_quandle.hpp"

namespace powq {

/// {"order": k, "mul": [k*k row-major], "names": [optional]}
FiniteGroup group_from_json(const nlohmann::json& doc);
nlohmann::json group_to_json(const FiniteGroup& g);

/// {"size": k, "unit": e, "exponent": N, "conj": [k*k], "pow": [N*k]}
PowerQuandle pq_from_json(const nlohmann::json& doc);
nlohmann::json pq_to_json(const PowerQuandle& p);

/// Reads and parses a JSON file; throws ParseError.
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

FiniteGroup read_group_file(const std::string& path);
PowerQuandle read_pq_file(const std::string& path);

}  // namespace powq
