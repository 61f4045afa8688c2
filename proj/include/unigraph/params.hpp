#pragma once

#include <utility>
#include <vector>

#include "unigraph/decomp.hpp"
#include "unigraph/unitype.hpp"

namespace unigraph {

struct CoreParams {
  Count omega = 0;
  Count alpha = 0;
  Count beta = 0;
  Count chi = 0;
  friend bool operator==(const CoreParams&, const CoreParams&) = default;
};

struct ParamSet {
  Count omega = 0;
  Count alpha = 0;
  Count beta = 0;
  Count chi = 0;
  Count fix = 0;
  Count dist = 0;
  bool perfect = true;
};

// (clique number, independence number) of one component.
std::pair<Count, Count> component_omega_alpha(const TypedComponent& t);

// Throws NotUnigraph unless r.is_unigraph.
CoreParams core_params(const Decomposition& d, const UnigraphReport& r);

Count component_fix(const TypedComponent& t);
Count fixing_number(const CompactDecomposition& c, const std::vector<TypedComponent>& types);

Count component_dist(const TypedComponent& t);
Count distinguishing_number(const CompactDecomposition& c,
                            const std::vector<TypedComponent>& types);

// All of the above for one sequence; throws NotUnigraph.
ParamSet compute_params(const DegreeSequence& s);

}  // namespace unigraph
