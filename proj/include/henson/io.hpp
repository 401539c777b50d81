#pragma once

#include <string>

#include <json.hpp>

#include "henson/graph.hpp"

namespace henson {

// {"n": int, "size": int, "adjacency": [row bitstring per vertex],
//  "labels": [[m, j], ...]}; row j lists edge(j, i) for i < j.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& doc);

// DOT rendering with vertices named v{m}_{j} by their neighborhood labels.
std::string graph_to_dot(const Graph& g);

}  // namespace henson
