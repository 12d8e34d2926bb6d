#pragma once
#include <string>

#include <json.hpp>

#include "satlab/graph.hpp"

namespace satlab {

// {"n": 5, "edges": [[0,1],...], "labels": {"0": "S", ...}}
// Edges are emitted with u < v in lexicographic order; labels only when any
// vertex carries one. Round-trips losslessly through graph_from_json.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Graphviz "graph { ... }" text. Emission only; we never parse DOT.
std::string graph_to_dot(const Graph& g);

} // namespace satlab
