#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gaf/framework.hpp"

namespace gaf {

// ICCMA aspartix format: `arg(X).` and `att(X,Y).` statements, `%` comments.
Aaf parse_apx(std::string_view text);
std::string emit_apx(const Aaf& f);

// Trivial graph format: node lines, a `#` line, then `X Y` edge lines.
Aaf parse_tgf(std::string_view text);
std::string emit_tgf(const Aaf& f);

std::string emit_dot(const Aaf& f, const std::optional<ArgSet>& highlight = std::nullopt);

// {"arguments":[...],"attacks":[[x,y],...],"families":{name:[[...],...]}}
nlohmann::json to_json(const Aaf& f, const std::map<std::string, ExtensionFamily>& families = {});
nlohmann::json family_to_json(const Aaf& f, const ExtensionFamily& family);
Aaf aaf_from_json(const nlohmann::json& j);
ExtensionFamily family_from_json(const Aaf& f, const nlohmann::json& j);

enum class InputFormat { Apx, Tgf, Json };
InputFormat parse_format(std::string_view name);
Aaf parse_framework(std::string_view text, InputFormat format);
std::string read_file(const std::string& path);

}  // namespace gaf
