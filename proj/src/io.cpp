#include "unigraph/io.hpp"

#include <sstream>

namespace unigraph {

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorCode::kParse, "edge list must start with 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::kParse, "expected " + std::to_string(m) + " edges, got " +
                                         std::to_string(i));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kParse, "trailing data after edge list");
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["n"] = g.order();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc;
}

Graph graph_from_json(const Json& doc) {
  try {
    const auto n = doc.at("n").get<Vertex>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParse, "edge must be [u,v]");
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Graph::from_edges(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kParse, std::string("graph JSON: ") + ex.what());
  }
}

}  // namespace unigraph
