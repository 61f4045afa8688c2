#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "unigraph/unitype.hpp"

namespace unigraph {

struct GenSpec {
  Count n = 1;
  Count k = 1;
  std::uint64_t seed = 0;
  // Restricts the bases that may be drawn; nullopt allows all of them.
  std::optional<std::set<Base>> allowed;
  // Avoid adjacent single-vertex components that the compact form merges.
  bool distinct_compact = false;
};

// k-1 split heads followed by one tail, orders summing to n. Throws
// Infeasible when no such list exists.
std::vector<TypedComponent> generate(const GenSpec& spec);

// Degree sequence of the composition of the listed components.
DegreeSequence compose_types(const std::vector<TypedComponent>& components);

}  // namespace unigraph
