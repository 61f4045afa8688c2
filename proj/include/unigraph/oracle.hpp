#pragma once

// Exhaustive ground truth for small graphs. Nothing here uses the fast
// decomposition, type or parameter code.

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph::oracle {

inline constexpr int kMaxRealizationOrder = 10;
inline constexpr int kMaxClassCountOrder = 10;
inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMaxAutomorphismListOrder = 9;
inline constexpr int kMaxAutomorphismCountOrder = 10;
inline constexpr int kMaxParamsOrder = 12;
inline constexpr int kMaxSymmetryOrder = 9;

struct Permutation {
  std::vector<Vertex> mapping;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Upper triangle of the adjacency matrix in canonical vertex order.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct BruteParams {
  Count omega = 0;
  Count alpha = 0;
  Count beta = 0;
  Count chi = 0;
  friend bool operator==(const BruteParams&, const BruteParams&) = default;
};

// Every labelled graph on 0..n-1 where vertex i has degree expand()[i].
// The visitor returns false to stop early.
void for_each_realization(const DegreeSequence& s,
                          const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_realizations(const DegreeSequence& s);

// Like for_each_realization but skips choices that only differ by swapping
// interchangeable vertices. Every isomorphism class is still visited.
void for_each_realization_up_to_swaps(const DegreeSequence& s,
                                      const std::function<bool(const Graph&)>& visit);

bool has_realization(const DegreeSequence& s);

CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);
Count count_isomorphism_classes(const DegreeSequence& s);

bool is_automorphism(const Graph& g, const Permutation& p);
std::vector<Permutation> automorphisms(const Graph& g);
Count count_automorphisms(const Graph& g);

// True if some clique/stable bipartition exists (all 2^n checked).
bool is_split_graph(const Graph& g);

BruteParams brute_params(const Graph& g);
Count brute_fix(const Graph& g);
Count brute_dist(const Graph& g);

}  // namespace unigraph::oracle
