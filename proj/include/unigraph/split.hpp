#pragma once

#include <optional>
#include <string_view>

#include "unigraph/degseq.hpp"

namespace unigraph {

enum class SplitKind { kBalanced, kKMax, kSMax, kNotSplit };

struct SplitClass {
  SplitKind kind = SplitKind::kNotSplit;
  std::optional<PairedDegreeSequence> paired;

  bool is_split() const { return kind != SplitKind::kNotSplit; }
};

std::string_view to_string(SplitKind kind);

// Top m degrees form the clique side, where m = max{i : d_i >= i-1}.
// Unbalanced inputs come back as the K-max partition, tagged kKMax.
SplitClass determine_split(const DegreeSequence& s);

// Moves one swing vertex (clique degree p-1) to the stable side.
PairedDegreeSequence shift_to_s_max(const PairedDegreeSequence& k_max);

}  // namespace unigraph
