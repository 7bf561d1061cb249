#pragma once

// graph6 and edge-list JSON codecs for SimpleGraph.

#include <string>
#include <string_view>

#include <json.hpp>

#include "graphprod/graph.hpp"

namespace graphprod {

// Small-graph graph6 (1 <= n <= 62). An optional ">>graph6<<" header and
// trailing whitespace are accepted. Errors carry the offending byte offset.
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

// {"n": int, "edges": [[i, j], ...], "names": [...]?}
SimpleGraph graph_from_json(const nlohmann::json& doc);
SimpleGraph parse_edge_json(std::string_view text);
nlohmann::json graph_to_json(const SimpleGraph& g);

// Parses text as JSON, reporting syntax errors with their byte offset.
nlohmann::json parse_json_text(std::string_view text);

std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

}  // namespace graphprod
