#include "unigraph/graph.hpp"

#include <algorithm>
#include <string>

namespace unigraph {

Graph::Graph(Vertex n) : adjacency_(static_cast<std::size_t>(std::max<Vertex>(n, 0))) {}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop at " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::kInvalidArgument, "repeated edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Count Graph::edge_count() const {
  Count twice = 0;
  for (const auto& list : adjacency_) twice += static_cast<Count>(list.size());
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

// Returns per-vertex side: 1 for K, 2 for S, or empty if the sets are not a
// disjoint cover of the vertex set.
std::vector<int> sides(const Graph& g, const VertexPartition& part) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), 0);
  auto mark = [&](const std::vector<Vertex>& set, int tag) {
    for (Vertex v : set) {
      if (v < 0 || v >= g.order() || side[v] != 0) return false;
      side[v] = tag;
    }
    return true;
  };
  if (!mark(part.k_set, 1) || !mark(part.s_set, 2)) return {};
  if (std::find(side.begin(), side.end(), 0) != side.end()) return {};
  return side;
}

void require_partition(const Graph& g, const VertexPartition& part) {
  if (!is_ks_partition(g, part)) {
    throw Error(ErrorCode::kInvalidPartition, "not a clique/stable partition");
  }
}

}  // namespace

bool is_ks_partition(const Graph& g, const VertexPartition& part) {
  const std::vector<int> side = sides(g, part);
  if (side.empty() && g.order() > 0) return false;
  const auto k = static_cast<Count>(part.k_set.size());
  for (Vertex v : part.k_set) {
    Count inside = 0;
    for (Vertex w : g.neighbors(v)) inside += side[w] == 1;
    if (inside != k - 1) return false;
  }
  for (Vertex v : part.s_set) {
    for (Vertex w : g.neighbors(v)) {
      if (side[w] == 2) return false;
    }
  }
  return true;
}

DegreeSequence degree_sequence_of(const Graph& g) {
  std::vector<Count> degrees;
  degrees.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  return normalize(degrees);
}

PairedDegreeSequence paired_sequence_of(const Graph& g, const VertexPartition& part) {
  require_partition(g, part);
  std::vector<Count> k;
  std::vector<Count> s;
  for (Vertex v : part.k_set) k.push_back(g.degree(v));
  for (Vertex v : part.s_set) s.push_back(g.degree(v));
  return {normalize(k), normalize(s)};
}

Graph compose_graphs(const Graph& head, const VertexPartition& part, const Graph& tail) {
  require_partition(head, part);
  const Vertex shift = head.order();
  std::vector<Edge> edges = head.edges();
  for (const auto& [u, v] : tail.edges()) edges.push_back({u + shift, v + shift});
  for (Vertex a : part.k_set) {
    for (Vertex t = 0; t < tail.order(); ++t) edges.push_back({a, t + shift});
  }
  return Graph::from_edges(shift + tail.order(), edges);
}

Graph complement_graph(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto nbrs = g.neighbors(u);
    auto it = nbrs.begin();
    for (Vertex v = u + 1; v < g.order(); ++v) {
      while (it != nbrs.end() && *it < v) ++it;
      if (it == nbrs.end() || *it != v) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(g.order(), edges);
}

std::pair<Graph, VertexPartition> inverse_graph(const Graph& g, const VertexPartition& part) {
  require_partition(g, part);
  const std::vector<int> side = sides(g, part);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == 1 && side[v] == 1) continue;
    edges.push_back({u, v});
  }
  for (std::size_t i = 0; i < part.s_set.size(); ++i) {
    for (std::size_t j = i + 1; j < part.s_set.size(); ++j) {
      edges.push_back({part.s_set[i], part.s_set[j]});
    }
  }
  return {Graph::from_edges(g.order(), edges), VertexPartition{part.s_set, part.k_set}};
}

}  // namespace unigraph
