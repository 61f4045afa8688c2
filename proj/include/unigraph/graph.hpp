#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "unigraph/degseq.hpp"

namespace unigraph {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);

  // Rejects loops, out-of-range ids and repeated edges.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex order() const { return static_cast<Vertex>(adjacency_.size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  Count degree(Vertex v) const {
    return static_cast<Count>(adjacency_[v].size());
  }
  bool has_edge(Vertex u, Vertex v) const;
  Count edge_count() const;
  // Each edge once as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

struct VertexPartition {
  std::vector<Vertex> k_set;
  std::vector<Vertex> s_set;
};

bool is_ks_partition(const Graph& g, const VertexPartition& part);

DegreeSequence degree_sequence_of(const Graph& g);
PairedDegreeSequence paired_sequence_of(const Graph& g,
                                        const VertexPartition& part);

// Head vertices keep their ids; tail ids are shifted by head.order().
Graph compose_graphs(const Graph& head, const VertexPartition& part,
                     const Graph& tail);
Graph complement_graph(const Graph& g);
std::pair<Graph, VertexPartition> inverse_graph(const Graph& g,
                                                const VertexPartition& part);

}  // namespace unigraph
