#pragma once

#include <string>

#include <json.hpp>

#include "anforge/core.hpp"
#include "anforge/dynamics.hpp"
#include "anforge/galois.hpp"
#include "anforge/structure.hpp"

namespace anforge::io {

using nlohmann::json;

// {"n":, "q":, "rules": [{"inputs": [...], "table": [...]}, ...]}
json to_json(const AutomataNetwork& net);
AutomataNetwork network_from_json(const json& j);

// {"n":, "q":, "images": [...]}
json to_json(const GlobalMap& map);
GlobalMap global_map_from_json(const json& j);

// {"p":, "m":, "modulus": [c0..cm]}
json to_json(const galois::FieldSpec& spec);
galois::FieldSpec field_spec_from_json(const json& j);

json to_json(const dynamics::CycleStructure& cs);
json to_json(const dynamics::PreimageProfile& profile);

// Either format, detected by the presence of "rules" or "images".
bool looks_like_network(const json& j);

// digraph { 1; 2; 1 -> 2; ... }
std::string interaction_graph_dot(const structure::InteractionGraph& g);

// One arc per configuration, labels are base-q digit strings, node 1
// leftmost.
std::string dynamics_dot(const GlobalMap& map);

std::string certificate_hex(const dynamics::CanonicalForm& form);

json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

} // namespace anforge::io
