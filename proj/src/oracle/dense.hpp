#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph::oracle::detail {

using Mask = std::uint32_t;

// Adjacency bit rows; small n only.
struct Dense {
  int n = 0;
  std::array<Mask, 32> row{};

  bool adj(int u, int v) const { return (row[u] >> v) & 1u; }
  void add_edge(int u, int v) {
    row[u] |= Mask{1} << v;
    row[v] |= Mask{1} << u;
  }
  void remove_edge(int u, int v) {
    row[u] &= ~(Mask{1} << v);
    row[v] &= ~(Mask{1} << u);
  }
};

Dense to_dense(const Graph& g, int limit, const char* what);
Graph to_graph(const Dense& d);

using Coloring = std::vector<int>;

// Refines to the coarsest equitable colouring finer than the input.
// Colours come out as 0..k-1 ordered by a label-independent key; returns k.
int refine(const Dense& g, Coloring& colors);

// Calls visit for every colour-preserving automorphism (as an image array).
// Stops when visit returns false.
void for_each_automorphism(const Dense& g, const Coloring& colors,
                           const std::function<bool(const std::vector<int>&)>& visit);

bool has_nontrivial_automorphism(const Dense& g, const Coloring& colors);

}  // namespace unigraph::oracle::detail
