#pragma once

#include <optional>
#include <vector>

#include "unigraph/degseq.hpp"

namespace unigraph {

struct SplitPoint {
  Count p = 0;
  Count q = 0;
  friend bool operator==(const SplitPoint&, const SplitPoint&) = default;
};

// Components are listed head first: components[0] is the outermost G_k.
struct Decomposition {
  std::vector<PairedDegreeSequence> components;
  DegreeSequence tail;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Consecutive single-vertex components of one kind are merged into
// ((m-1)^m; -) or (-; 0^m) blocks. The tail survives only if it has at
// least two vertices; a single-vertex tail is folded into the list.
struct CompactDecomposition {
  std::vector<PairedDegreeSequence> components;
  std::optional<DegreeSequence> tail;
  friend bool operator==(const CompactDecomposition&, const CompactDecomposition&) = default;
};

// Lexicographically smallest (p, q) with 0 < p+q < N at which the sequence
// splits off a head, or nullopt if it is indecomposable. Requires a
// graphical input; N < 2 yields nullopt.
std::optional<SplitPoint> find_split_point(const DegreeSequence& s);

Decomposition decompose(const DegreeSequence& s);
DegreeSequence compose_all(const std::vector<PairedDegreeSequence>& components,
                           const DegreeSequence& tail);
CompactDecomposition compact(const Decomposition& d);

bool is_single_k(const PairedDegreeSequence& ps);
bool is_single_s(const PairedDegreeSequence& ps);

}  // namespace unigraph
