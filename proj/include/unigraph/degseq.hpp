#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unigraph/error.hpp"

namespace unigraph {

class Graph;

struct Run {
  Count degree = 0;
  Count count = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

// Non-increasing degree multiset stored as runs of equal degrees.
// Canonical form: strictly decreasing degrees, positive multiplicities.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  // Sorts, merges equal degrees and drops empty runs.
  static DegreeSequence from_runs(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  std::size_t run_count() const { return runs_.size(); }
  Count size() const { return n_; }
  bool empty() const { return n_ == 0; }
  Count max_degree() const { return runs_.empty() ? 0 : runs_.front().degree; }
  Count min_degree() const { return runs_.empty() ? 0 : runs_.back().degree; }
  Wide degree_sum() const;

  // Per-vertex degrees, non-increasing. Only sensible for small n.
  std::vector<Count> expand() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<Run> runs_;
  Count n_ = 0;
};

// Split component degrees: clique side first, stable side second.
struct PairedDegreeSequence {
  DegreeSequence k_part;
  DegreeSequence s_part;

  Count p() const { return k_part.size(); }
  Count q() const { return s_part.size(); }
  Count size() const { return p() + q(); }
  DegreeSequence merged() const;

  friend bool operator==(const PairedDegreeSequence&,
                         const PairedDegreeSequence&) = default;
};

DegreeSequence normalize(std::span<const Count> raw);

// Erdos-Gallai evaluated only at run boundaries.
bool is_graphical(const DegreeSequence& s);

// Checks the paired invariants: K degrees >= p-1, S degrees <= p, and the
// merged multiset is graphical with the given bipartition being feasible.
bool is_valid_paired(const PairedDegreeSequence& ps);

// Havel-Hakimi. Highest residual first, ties to the lower vertex id.
Graph realize(const DegreeSequence& s);

DegreeSequence complement_seq(const DegreeSequence& s);
PairedDegreeSequence complement_paired(const PairedDegreeSequence& ps);
PairedDegreeSequence inverse_paired(const PairedDegreeSequence& ps);
DegreeSequence compose_seq(const PairedDegreeSequence& head,
                           const DegreeSequence& tail);

// Text format: "8^4,5^4,2^2"; paired "3,2;1^3"; "-" for an empty part.
std::string to_string(const DegreeSequence& s);
std::string to_string(const PairedDegreeSequence& ps);
DegreeSequence parse_sequence(std::string_view text);
PairedDegreeSequence parse_paired(std::string_view text);

}  // namespace unigraph
