#pragma once

#include "gpoly/graph.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace gpoly {

enum class GraphFormat { automatic, json, graph6 };

GraphFormat parse_graph_format(std::string_view name);

// {"vertices":[{"id":0,"w":1,"d":0},...],"edges":[[0,1],...]}; edge i gets id i.
MarkedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const MarkedGraph& g);

// Simple unweighted graphs only; vertex i gets id i.
MarkedGraph parse_graph6(std::string_view text);
std::string to_graph6(const MarkedGraph& g);

// `automatic` picks JSON when the text starts with '{'.
MarkedGraph read_graph(const std::string& text, GraphFormat format = GraphFormat::automatic);

} // namespace gpoly
