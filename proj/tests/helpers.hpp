#pragma once

#include <random>
#include <vector>

#include "unigraph/degseq.hpp"
#include "unigraph/graph.hpp"

namespace unigraph::testing {

inline DegreeSequence seq(std::string_view text) { return parse_sequence(text); }
inline PairedDegreeSequence paired(std::string_view text) { return parse_paired(text); }

inline DegreeSequence seq_of(std::vector<Count> raw) { return normalize(raw); }

// Same graph with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  return Graph::from_edges(g.order(), edges);
}

inline std::vector<Vertex> shuffled_ids(Vertex n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace unigraph::testing
