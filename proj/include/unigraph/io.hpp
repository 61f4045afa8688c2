#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "unigraph/graph.hpp"

namespace unigraph {

using Json = nlohmann::ordered_json;

// "n m" header followed by m lines "u v", 0-indexed.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// {"n": ..., "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

}  // namespace unigraph
