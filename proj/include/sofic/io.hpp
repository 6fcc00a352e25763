#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "sofic/presentation.hpp"

namespace sofic {

using Json = nlohmann::ordered_json;

/// Parses the canonical document
/// {"alphabet":[...],"sidedness":"two-sided","vertices":[...],
///  "edges":[{"src":..,"dst":..,"label":..},...]}.
/// "sidedness" is optional and defaults to two-sided.
Presentation parse_presentation(std::string_view text);
Presentation presentation_from_json(const Json& doc);

Json to_json(const Presentation& p);
std::string to_json_text(const Presentation& p);

/// One node per vertex, edge label = symbol name.
std::string to_dot(const Presentation& p, std::string_view graph_name = "presentation");

std::string dot_quote(std::string_view s);

}  // namespace sofic
