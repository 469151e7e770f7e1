#pragma once

#include <string>

#include <json.hpp>

#include "totalcolor/graph.hpp"

namespace totalcolor {

using Json = nlohmann::ordered_json;

Json recipe_to_json(const Recipe& r);
/// Throws std::invalid_argument on a malformed recipe document.
Recipe recipe_from_json(const Json& j);

/// {"recipe": ..., "vertices": n, "max_degree": D, "labels": [...], "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g);
/// Rebuilds from the recipe and checks the stored edges agree.
Graph graph_from_json(const Json& j);

std::string graph_to_dot(const Graph& g);

}  // namespace totalcolor
