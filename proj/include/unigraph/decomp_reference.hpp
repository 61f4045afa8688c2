#pragma once

// Quadratic per-vertex versions of the decomposition search. Slow on
// purpose; used to cross-check the run-aware implementation.

#include <optional>

#include "unigraph/decomp.hpp"

namespace unigraph::reference {

std::optional<SplitPoint> find_split_point(const DegreeSequence& s);
Decomposition decompose(const DegreeSequence& s);

}  // namespace unigraph::reference
